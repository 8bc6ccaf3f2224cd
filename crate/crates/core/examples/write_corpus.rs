//! Regenerate the bundled corpus files from the builders.

use std::path::Path;

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    std::fs::create_dir_all(&dir)?;
    for d in shd_core::corpus::reference_diagrams() {
        let path = dir.join(format!("{}.shd", d.name()));
        std::fs::write(&path, shd_core::diagram::serialize(&d))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
