//! Words, lengths, γ-sequences and the Bruhat interval below an element.

use schubert_tangent::{RootSystem, Word};

fn main() {
    let a3 = RootSystem::from_label("A3").unwrap();
    let s: Word = "s2 s1 s3 s2".parse().unwrap();
    let x = a3.word_to_element(&s).unwrap();
    println!(
        "x = {s}, ℓ(x) = {}, reduced: {}",
        x.length(),
        a3.is_reduced(&s)
    );

    let gamma = a3.gamma_sequence(&s).unwrap();
    for (j, g) in gamma.gammas.iter().enumerate() {
        println!("  γ{} = {g}", j + 1);
    }

    let words = a3.all_reduced_words(&x).unwrap();
    println!("{} reduced words:", words.len());
    for w in &words {
        println!("  {w}");
    }

    let group = a3.enumerate_weyl_group().unwrap();
    let below: Vec<String> = group
        .iter()
        .filter(|w| a3.bruhat_leq(w, &x))
        .map(|w| a3.canonical_reduced_word(w).to_string())
        .collect();
    println!("[e, x] has {} elements: {}", below.len(), below.join(" "));
}
