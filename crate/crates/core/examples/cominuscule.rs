//! Cominuscule elements: count them, compare with 321-avoidance in type A,
//! and check that their reports are always complete.

use schubert_tangent::{Family, RootSystem};

fn main() {
    for label in ["A3", "A4", "B3", "D4"] {
        let rs = RootSystem::from_label(label).unwrap();
        let group = rs.enumerate_weyl_group().unwrap();
        let comin: Vec<_> = group
            .iter()
            .filter(|x| rs.is_cominuscule_element(x))
            .collect();
        print!(
            "{label}: {} of {} elements are cominuscule",
            comin.len(),
            group.len()
        );
        if rs.cartan_type().family() == Family::A {
            let avoiding = group
                .iter()
                .filter(|x| rs.type_a_cominuscule_oracle(x).unwrap())
                .count();
            print!(", {avoiding} are 321-avoiding");
        }
        println!();

        let incomplete = comin
            .iter()
            .flat_map(|x| {
                group
                    .iter()
                    .filter(|w| rs.bruhat_leq(w, x))
                    .map(move |w| (w, *x))
            })
            .filter(|(w, x)| !rs.kl_tangent_report(w, x).unwrap().complete)
            .count();
        println!("  incomplete reports at cominuscule points: {incomplete}");
    }

    let d4 = RootSystem::from_label("D4").unwrap();
    let x = d4.word_to_element(&"2 1 3 4 2".parse().unwrap()).unwrap();
    println!(
        "D4 s2s1s3s4s2 cominuscule: {}",
        d4.is_cominuscule_element(&x)
    );
}
