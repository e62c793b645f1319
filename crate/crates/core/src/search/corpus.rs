//! graph6 corpus files: one graph per line.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// Environment variable naming the default corpus directory.
pub const CORPUS_DIR_ENV: &str = "QTURAN_CORPUS_DIR";

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub graphs: Vec<Graph>,
    /// Malformed lines (1-based line number) skipped in lenient mode.
    pub errors: Vec<Error>,
}

/// Parses newline-separated graph6 text. Blank lines are skipped. In strict
/// mode the first malformed line aborts; otherwise it is recorded and
/// parsing continues.
pub fn read_corpus<R: Read>(reader: R, strict: bool) -> Result<Corpus> {
    let mut corpus = Corpus::default();
    for (k, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let text = line.trim_end_matches(['\r', '\n']);
        if text.trim().is_empty() {
            continue;
        }
        match parse_graph6(text.trim().as_bytes()) {
            Ok(g) => corpus.graphs.push(g),
            Err(e) => {
                let err = Error::CorpusLine {
                    line: k + 1,
                    message: e.to_string(),
                };
                if strict {
                    return Err(err);
                }
                corpus.errors.push(err);
            }
        }
    }
    Ok(corpus)
}

pub fn ingest_corpus(path: &Path, strict: bool) -> Result<Corpus> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read_corpus(file, strict)
}

/// `$QTURAN_CORPUS_DIR/graphs{n}.g6`, if the variable is set and the file exists.
pub fn default_corpus_path(n: usize) -> Option<PathBuf> {
    let dir = std::env::var_os(CORPUS_DIR_ENV)?;
    let path = Path::new(&dir).join(format!("graphs{n}.g6"));
    path.is_file().then_some(path)
}
