use std::path::Path;

use crate::error::{parse, CliError, Result};

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| parse(path, e))
}

pub fn ensure_dir(path: &Path) -> Result<()> {
    std::fs::create_dir_all(path)
        .map_err(|e| CliError::Parse(format!("cannot create {}: {e}", path.display())))
}

/// Writes a file atomically: the content lands in a temporary file in the
/// same directory and is renamed over the destination, so readers never
/// observe a half-written file.
pub fn atomic_write(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    ensure_dir(dir)?;
    let mut file = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| CliError::Parse(format!("cannot create temp file in {}: {e}", dir.display())))?;
    std::io::Write::write_all(&mut file, contents.as_bytes())
        .map_err(|e| parse(path, e))?;
    file.persist(path)
        .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

/// Renders rows as tab-separated lines under a header, with a trailing
/// newline.
pub fn tsv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}
