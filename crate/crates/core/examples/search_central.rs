//! Regenerates `data/central_a2.json` by an exact linear search.
//!
//! Usage: cargo run --release -p qloc-core --example search_central [K_MAX]

use qloc_core::weight_modules::{search_central, CentralElementSet};
use qloc_core::{RootDatum, Uq};

fn main() {
    let k_max: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let uq = Uq::new(RootDatum::a2());
    let t = std::time::Instant::now();
    let found = search_central(&uq, 2, k_max);
    eprintln!("kernel dimension {} ({:?})", found.len(), t.elapsed());
    for z in &found {
        eprintln!("  {}", uq.render(z));
    }
    let set = CentralElementSet {
        names: (1..=found.len()).map(|i| format!("z{i}")).collect(),
        elements: found,
    };
    assert!(set.all_central(&uq));
    println!("{}", set.to_json("A2"));
}
