//! Command-line front end for exact and asymptotic Fisher–Hartwig
//! determinants: sweeps, identity suites, CSV and SVG output.

pub mod svg;
pub mod sweep;
pub mod table;
pub mod verify;

/// Configures the global thread pool from `FHLAB_THREADS` when set.
pub fn init_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("FHLAB_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| anyhow::anyhow!("FHLAB_THREADS must be a positive integer, got '{v}'"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}
