use hwv_core::oracle::graded_nilcone_dim;
use hwv_core::partition::GLWeight;

fn main() {
    let start = std::time::Instant::now();
    let chi_a = GLWeight::new(vec![3, 3, 0, -2, -2, -2]);
    let (poly, map) = graded_nilcone_dim(&chi_a).unwrap();
    println!("A: map={map:?} lowest={:?} coeff={:?} K(1)={}", poly.lowest_degree(), poly.lowest_degree().map(|d| poly.coeff(d)), poly.eval_one());
    println!("   elapsed {:?}", start.elapsed());

    let start = std::time::Instant::now();
    let chi_b7 = GLWeight::new(vec![4, 4, 4, -3, -3, -3, -3]);
    let (poly, _) = graded_nilcone_dim(&chi_b7).unwrap();
    println!("B n=7: lowest={:?} K(1)={}", poly.lowest_degree(), poly.eval_one());
    println!("   elapsed {:?}", start.elapsed());

    let start = std::time::Instant::now();
    let chi_b8 = GLWeight::new(vec![4, 4, 4, 0, -3, -3, -3, -3]);
    let (poly, _) = graded_nilcone_dim(&chi_b8).unwrap();
    println!("B n=8: lowest={:?} K(1)={}", poly.lowest_degree(), poly.eval_one());
    println!("   elapsed {:?}", start.elapsed());
}
