//! Positive roots, highest roots and cominuscule nodes for a few types.
//!
//!     cargo run --example root_systems -- D4

use schubert_tangent::RootSystem;

fn main() {
    let labels: Vec<String> = std::env::args().skip(1).collect();
    let labels = if labels.is_empty() {
        vec!["A3".into(), "B3".into(), "D4".into(), "G2".into()]
    } else {
        labels
    };
    for label in labels {
        let rs = RootSystem::from_label(&label).expect("a Cartan type such as A3 or E6");
        let ct = rs.cartan_type();
        println!(
            "{ct}: |Φ+| = {}, |W| = {}",
            rs.positive_roots().len(),
            ct.weyl_group_order()
        );
        println!("  Cartan matrix {:?}", rs.cartan_matrix());
        println!("  highest root {}", rs.highest_root());
        println!("  cominuscule nodes {:?}", rs.cominuscule_nodes());
        let roots: Vec<String> = rs.positive_roots().iter().map(|r| r.to_string()).collect();
        println!("  Φ+ = {{{}}}", roots.join(", "));
    }
}
