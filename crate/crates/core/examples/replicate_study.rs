//! All three reference sweeps against one dataset, the full-graph baseline,
//! and a table of which strategy lands closest on each property.
//!
//! ```text
//! cargo run --release --example replicate_study -- data/facebook_combined.txt
//! ```

use std::path::{Path, PathBuf};

use netsample::experiment::{load_dataset, replicate};
use netsample::synthetic;

fn main() -> netsample::Result<()> {
    let (g, path) = match std::env::args_os().nth(1) {
        Some(path) => (load_dataset(path.as_ref())?, PathBuf::from(path)),
        None => {
            eprintln!("no dataset given; using a 4039-node synthetic social graph");
            (
                synthetic::social_graph(4039, 88_234, 1)?,
                PathBuf::from("synthetic"),
            )
        }
    };
    let out = Path::new("replicate_out");
    let study = replicate(&g, &path, 0, 3, out)?;
    println!("{}", study.comparison.summary_markdown());
    println!("wrote {}/", out.display());
    Ok(())
}
