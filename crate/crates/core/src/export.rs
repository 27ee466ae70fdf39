//! On-disk form of complexes: one basis listing per term, one matrix file
//! per differential, and a manifest tying them together.
//!
//! Manifest lines:
//!
//! ```text
//! complex <label>
//! field <q|f2|f3|f5|f7>
//! term <degree> <label> <dim> <basis file>
//! map <source label> <target label> <rows> <cols> <nnz> <matrix file>
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::scalar::ExactField;

/// File-name stem for a label: `T_4^2` becomes `T_4_2`.
pub fn file_stem(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Renders the manifest and every file it names, keyed by file name.
pub fn render_complex<F: ExactField>(complex: &ChainComplex<F>) -> Vec<(String, String)> {
    let mut files = Vec::new();
    let mut manifest = String::new();
    writeln!(manifest, "complex {}", complex.label).unwrap();
    writeln!(manifest, "field {}", F::field_spec().token()).unwrap();
    for (k, term) in complex.terms.iter().enumerate() {
        let name = format!("{}.basis", file_stem(term.label()));
        writeln!(
            manifest,
            "term {} {} {} {}",
            complex.start_degree + k as i64,
            term.label(),
            term.dim(),
            name
        )
        .unwrap();
        files.push((name, term.export_listing()));
    }
    for d in &complex.differentials {
        let name = format!(
            "{}__{}.mat",
            file_stem(d.source.label()),
            file_stem(d.target.label())
        );
        writeln!(
            manifest,
            "map {} {} {} {} {} {}",
            d.source.label(),
            d.target.label(),
            d.matrix.rows(),
            d.matrix.cols(),
            d.matrix.nnz(),
            name
        )
        .unwrap();
        files.push((name, d.matrix.export_text()));
    }
    files.insert(0, ("manifest.txt".to_string(), manifest));
    files
}

/// Writes [`render_complex`] into `dir`, creating it if needed.
pub fn write_complex<F: ExactField>(dir: &Path, complex: &ChainComplex<F>) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut written = Vec::new();
    for (name, contents) in render_complex(complex) {
        let path = dir.join(name);
        write_file(&path, &contents)?;
        written.push(path);
    }
    Ok(written)
}
