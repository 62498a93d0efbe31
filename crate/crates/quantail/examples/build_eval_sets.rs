//! Regenerate the bundled evaluation corpora under ./data (seeded, so the
//! files come out byte-identical for a given seed).
//!
//! Usage: cargo run --example build_eval_sets [seed]

use std::path::Path;

fn main() -> std::io::Result<()> {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(17);
    let rows = quantail::corpus::generate_all(Path::new("data"), seed)?;
    for (file, count) in rows {
        println!("{:>18}  {} pairs", file, count);
    }
    Ok(())
}
