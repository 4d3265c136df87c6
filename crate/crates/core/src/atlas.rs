//! Graph atlases stored as graph6 files, one graph per line.
//!
//! A directory holds `graphs<n>.g6` (every graph on `n` vertices up to
//! isomorphism), `trees<n>.g6` and `cubic<n>.g6`. Missing `trees<n>` files
//! are filled in from `graphs<n>`.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{read_graph6_lines, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atlas {
    dir: PathBuf,
}

impl Atlas {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Atlas { dir: dir.into() }
    }

    /// The atlas shipped in the repository's `data/atlas` directory.
    pub fn bundled() -> Self {
        Atlas::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/atlas"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn has(&self, name: &str) -> bool {
        self.dir.join(name).is_file()
    }

    /// Streams one file; errors carry the file name and line number.
    pub fn stream(&self, name: &str) -> Result<impl Iterator<Item = Result<Graph>>> {
        let path = self.dir.join(name);
        let file = File::open(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let label = path.display().to_string();
        Ok(read_graph6_lines(BufReader::new(file))
            .map(move |(line, g)| g.map_err(|e| Error::Graph6(format!("{label}:{line}: {e}")))))
    }

    /// Loads the graphs of one file that satisfy `keep`.
    pub fn load(&self, name: &str, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for g in self.stream(name)? {
            let g = g?;
            if keep(&g) {
                out.push(g);
            }
        }
        Ok(out)
    }

    pub fn graphs(&self, n: usize) -> Result<Vec<Graph>> {
        self.load(&format!("graphs{n}.g6"), |_| true)
    }

    pub fn connected(&self, n: usize) -> Result<Vec<Graph>> {
        self.load(&format!("graphs{n}.g6"), Graph::is_connected)
    }

    pub fn trees(&self, n: usize) -> Result<Vec<Graph>> {
        let name = format!("trees{n}.g6");
        if self.has(&name) {
            self.load(&name, |_| true)
        } else {
            self.load(&format!("graphs{n}.g6"), Graph::is_tree)
        }
    }

    pub fn connected_bipartite(&self, n: usize) -> Result<Vec<Graph>> {
        self.load(&format!("graphs{n}.g6"), |g| {
            g.is_connected() && g.is_bipartite()
        })
    }

    pub fn cubic(&self, n: usize) -> Result<Vec<Graph>> {
        self.load(&format!("cubic{n}.g6"), |_| true)
    }
}
