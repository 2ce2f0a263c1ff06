//! Tangent-weight verdicts at a fixed point, with and without the type-A
//! criterion for decomposable weights.
//!
//!     cargo run --example tangent_report -- A3 "2 1 3 2" "2"

use schubert_tangent::cli::ReportView;
use schubert_tangent::{ReportOptions, RootSystem, Word};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (label, x, w) = match args.as_slice() {
        [l, x, w] => (l.as_str(), x.as_str(), w.as_str()),
        _ => ("A3", "1 2 3 2 1", "2"),
    };
    let rs = RootSystem::from_label(label).unwrap();
    let s: Word = x.parse().unwrap();
    let w = rs.word_to_element(&w.parse().unwrap()).unwrap();

    let report = rs
        .tangent_report_for_word(&w, &s, ReportOptions::default())
        .unwrap();
    for st in &report.statuses {
        println!(
            "j={} γ={:<12} {:<12} indecomposable={} δ≥w={}",
            st.position,
            st.gamma.to_string(),
            st.verdict.to_string(),
            st.evidence.indecomposable,
            st.evidence.demazure_ok
        );
    }
    match report.schubert_tangent_weights() {
        Some(t) => println!("dim T_x X^w = {}", t.len()),
        None => println!("some weights are undetermined"),
    }

    if rs.cartan_type().family() == schubert_tangent::Family::A {
        let opts = ReportOptions {
            type_a_oracle: true,
            ..ReportOptions::default()
        };
        let full = rs.tangent_report_for_word(&w, &s, opts).unwrap();
        println!("with the type-A criterion: {:?}", full.verdicts());
        println!(
            "{}",
            serde_json::to_string_pretty(&ReportView::new(&rs, &full)).unwrap()
        );
    }
}
