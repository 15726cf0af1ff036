//! Writes the three plot-data tables to a directory (default: the system
//! temp dir) and prints their sizes.
//!
//!     cargo run --example plot_data -- out/

use std::path::PathBuf;

use levelwise::cli::plot::{figure1, figure2, figure3};
use levelwise::linear::LinearFunctional;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;

    let f = LinearFunctional::new(vec![2.0, 1.0, 2.0])?;
    let tables = [
        ("fig1.csv", figure1(&f, 64, 42)),
        ("fig2.csv", figure2(256)),
        ("fig3.csv", figure3(64)),
    ];
    for (name, table) in tables {
        let path = dir.join(name);
        table.write_csv(std::fs::File::create(&path)?)?;
        println!(
            "{}: {} rows, columns {}",
            path.display(),
            table.rows.len(),
            table.header.join(",")
        );
    }
    Ok(())
}
