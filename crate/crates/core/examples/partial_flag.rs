//! Tangent weights on a partial flag variety G/P: both elements must be
//! minimal coset representatives.

use schubert_tangent::{ReportOptions, RootSystem};

fn main() {
    let a3 = RootSystem::from_label("A3").unwrap();
    // the Grassmannian of 2-planes in C^4: P generated by s1, s3
    let p = [1, 3];
    let group = a3.enumerate_weyl_group().unwrap();
    let reps: Vec<_> = group
        .iter()
        .filter(|x| a3.is_min_coset_rep(x, &p))
        .collect();
    println!("|W^P| = {}", reps.len());

    let x = reps.iter().max_by_key(|x| x.length()).unwrap();
    for w in reps.iter().filter(|w| a3.bruhat_leq(w, x)) {
        let r = a3
            .gp_tangent_report(w, x, &p, ReportOptions::default())
            .unwrap();
        let t = r
            .schubert_tangent_weights()
            .expect("cominuscule, so complete");
        println!(
            "w = {:<10} dim T = {}",
            a3.canonical_reduced_word(w).to_string(),
            t.len()
        );
    }

    let not_rep = a3.word_to_element(&"1".parse().unwrap()).unwrap();
    println!(
        "{:?}",
        a3.gp_tangent_report(&a3.identity(), &not_rep, &p, ReportOptions::default())
            .unwrap_err()
    );
}
