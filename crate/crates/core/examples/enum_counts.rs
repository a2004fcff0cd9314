//! Print the number of connected subcubic and cubic graphs per order.

use std::time::Instant;

use idom::enumerator::{enumerate_connected_cubic_with, enumerate_connected_subcubic_with};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    for n in 2..=max {
        let t = Instant::now();
        let sub = enumerate_connected_subcubic_with(n, max)
            .expect("within ceiling")
            .len();
        let t_sub = t.elapsed();
        let t = Instant::now();
        let cubic = enumerate_connected_cubic_with(n, max)
            .expect("within ceiling")
            .len();
        println!(
            "n={n:2} subcubic={sub:6} ({:.2}s) cubic={cubic:4} ({:.2}s)",
            t_sub.as_secs_f64(),
            t.elapsed().as_secs_f64()
        );
    }
}
