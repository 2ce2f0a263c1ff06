//! Demazure products of nonreduced words.

use schubert_tangent::{RootSystem, Word};

fn main() {
    let b2 = RootSystem::from_label("B2").unwrap();
    for q in ["1 1", "1 2 1 2", "1 2 1 2 1", "2 1 2 1 2 1 2"] {
        let q: Word = q.parse().unwrap();
        let d = b2.demazure_summary(&q).unwrap();
        println!(
            "δ{} = {}  (ℓ = {}, excess {})",
            d.word, d.delta, d.delta_length, d.excess
        );
    }
}
