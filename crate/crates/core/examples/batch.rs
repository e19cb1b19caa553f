// Run a JSON-lines corpus into a CSV summary with a result cache.

use std::error::Error;
use std::fs;

use derham_graded::cli::{batch, example_corpus, BatchOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    let corpus = dir.path().join("corpus.jsonl");
    let mut text = example_corpus(2..=3);
    text.push_str(r#"{"weights":[2,2],"f":"x1^2+x2^2","command":"koszul-h1","window":"0:8"}"#);
    text.push('\n');
    text.push_str(r#"{"weights":[1,1],"f":"x1^2+x2","command":"hilbert"}"#);
    text.push('\n');
    fs::write(&corpus, text)?;

    let out = dir.path().join("out.csv");
    let opts = BatchOptions {
        jobs: Some(2),
        cache_dir: Some(dir.path().join("cache")),
        timing: false,
    };
    let first = batch(&corpus, &out, &opts)?;
    print!("{}", fs::read_to_string(&out)?);
    let again = batch(&corpus, &out, &opts)?;
    println!(
        "jobs {} ok {} failed {}; rerun cache hits {}",
        first.jobs, first.ok, first.failed, again.cache_hits
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
