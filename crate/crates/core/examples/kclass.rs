//! The K-theory class P_{w,s} and the start of the tangent-cone character
//! P_{w,s} / ∏(1 - e^{-γ_j}).

use schubert_tangent::rt_ring::char_series;
use schubert_tangent::{LaurentPoly, RootSystem, Word};

fn main() {
    let a2 = RootSystem::from_label("A2").unwrap();
    let s: Word = "1 2 1".parse().unwrap();
    let w = a2.simple_reflection(1);

    let p = a2.k_theory_class(&w, &s).unwrap();
    println!("P = {p}");
    println!("JSON: {}", serde_json::to_string(&p).unwrap());

    let gammas = a2.gamma_sequence(&s).unwrap().gammas;
    let series = char_series(&p, &gammas, 2, 3).unwrap();
    println!("character up to height 3: {}", series.to_poly());

    for g in &gammas {
        let c = a2.tangent_cone_coefficient(&-g, &w, &s).unwrap();
        println!("  coefficient of {} = {c}", LaurentPoly::monomial(-g, 1));
    }
}
