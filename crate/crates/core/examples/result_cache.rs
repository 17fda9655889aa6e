//! Solve through the on-disk cache; the second lookup is a hit.

use bcbp::cli::{solve_record, RunOptions, ResultCache};
use bcbp::sieve::DEFAULT_MAX_FRONTIER;

fn main() -> bcbp::Result<()> {
    let dir = tempfile::tempdir()?;
    let opts = RunOptions {
        threads: None,
        max_frontier: DEFAULT_MAX_FRONTIER,
        cache_dir: Some(dir.path().to_path_buf()),
        recompute: false,
    };

    let first = solve_record(62, &opts)?;
    let path = ResultCache::new(dir.path()).path_for(62);
    println!("stored {}", path.display());
    let second = solve_record(62, &opts)?;
    assert_eq!(first, second);
    println!("{}", second.to_json_line()?);
    Ok(())
}
