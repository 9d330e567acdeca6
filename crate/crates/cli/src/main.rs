use std::io::Read;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let argv: Vec<&str> = args.iter().map(String::as_str).collect();
    // Only the pullback subcommand reads stdin; skip the read otherwise so
    // interactive runs do not block.
    let stdin = if argv.get(1).map(|s| *s == "pullback").unwrap_or(false) {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .expect("read stdin");
        buf
    } else {
        String::new()
    };
    let mut stdout = std::io::stdout().lock();
    std::process::exit(hwv_cli::run(&argv, &stdin, &mut stdout));
}
