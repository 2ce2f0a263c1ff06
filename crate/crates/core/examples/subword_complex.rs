//! A subword complex, its facets and Euler characteristics, and the
//! Hecke subwords that make up T_{w,s}.

use schubert_tangent::{RootSystem, Word};

fn main() {
    let a3 = RootSystem::from_label("A3").unwrap();
    let s: Word = "1 2 3 1 2 1".parse().unwrap();
    let w = a3.word_to_element(&"1 2".parse().unwrap()).unwrap();

    let c = a3.build_complex(&w, &s).unwrap();
    println!(
        "Δ({s}, s1s2): dimension {}, {} faces",
        c.dimension(),
        c.faces().len()
    );
    for f in c.facets() {
        println!("  facet {:?}", f.indices());
    }
    let e = c.euler_characteristics();
    println!("χ̃ = {}, interior χ = {}", e.reduced, e.interior);

    let t = a3.hecke_subwords(&w, &s).unwrap();
    println!(
        "|T_{{w,s}}| = {}, Σ(-1)^e = {}",
        t.len(),
        a3.euler_signed_sum(&w, &s).unwrap()
    );
    for h in t.iter().take(8) {
        println!("  {:?} excess {}", h.indices.indices(), h.excess);
    }
}
