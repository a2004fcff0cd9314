//! Count connected cubic graphs by brute force and write the fixture used by
//! the enumeration tests.
//!
//! cargo run --release -p idom-core --example cubic_oracle -- crates/core/tests/fixtures/cubic_counts.txt

#[path = "../tests/common/oracles.rs"]
mod oracles;

use std::fmt::Write as _;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "crates/core/tests/fixtures/cubic_counts.txt".to_string());
    let mut text = String::from(
        "# connected cubic graphs per order, from BFS-labeled backtracking\n\
         # deduplicated by brute-force canonical strings\n\
         # order count\n",
    );
    for n in [4, 6, 8, 10] {
        let classes = oracles::cubic_classes(n);
        eprintln!("n={n}: {}", classes.len());
        let _ = writeln!(text, "{n} {}", classes.len());
    }
    std::fs::write(&path, text).expect("fixture path is writable");
}
