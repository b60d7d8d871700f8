//! The `.scx` facet-list format.
//!
//! UTF-8 text; `#` starts a comment line; every other non-blank line is one
//! facet with whitespace-separated vertex labels. Output lists facets in
//! lexicographic order of vertex ids, vertices within a facet in id order.

use std::fs;
use std::path::Path;

use super::SimplicialComplex;
use crate::error::{Error, Result};

impl SimplicialComplex {
    pub fn parse(text: &str) -> Result<Self> {
        let mut facets = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let facet: Vec<&str> = line.split_whitespace().collect();
            let mut sorted = facet.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("vertex `{}` repeated in facet", w[0]),
                });
            }
            facets.push(facet);
        }
        Self::from_facets(facets)
    }

    pub fn to_scx(&self) -> String {
        let mut out = String::new();
        for f in self.facets() {
            out.push_str(&self.face_labels(f).join(" "));
            out.push('\n');
        }
        out
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_scx()).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }
}
