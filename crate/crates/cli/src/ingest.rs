//! Newline-delimited graph6 corpora.

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use penergy::graph::Graph;
use penergy::graph6::{parse_graph6, Graph6Error};

/// A malformed line, numbered from 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LineError {
    pub line: usize,
    pub error: Graph6Error,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl std::error::Error for LineError {}

#[derive(Debug)]
pub enum IngestError {
    Io(io::Error),
    Line(LineError),
}

impl fmt::Display for IngestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IngestError::Io(e) => write!(f, "{e}"),
            IngestError::Line(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for IngestError {}

/// Streams graphs from graph6 lines in file order. Blank lines are skipped;
/// each remaining line yields a graph or a [`LineError`].
pub struct Graph6Lines<R> {
    reader: R,
    line: usize,
    buffer: String,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R) -> Self {
        Graph6Lines {
            reader,
            line: 0,
            buffer: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph, IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buffer.clear();
            match self.reader.read_line(&mut self.buffer) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(IngestError::Io(e))),
            }
            self.line += 1;
            let text = self.buffer.trim_end_matches(['\n', '\r']);
            if text.trim().is_empty() {
                continue;
            }
            return Some(parse_graph6(text).map_err(|error| {
                IngestError::Line(LineError {
                    line: self.line,
                    error,
                })
            }));
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IngestOptions {
    /// Record malformed lines and continue instead of stopping at the first.
    pub skip_bad_lines: bool,
    /// Drop disconnected graphs.
    pub connected_only: bool,
}

#[derive(Debug, Default)]
pub struct Ingested {
    pub graphs: Vec<Graph>,
    pub bad_lines: Vec<LineError>,
    pub disconnected: usize,
}

/// Reads a graph6 file. In fail-fast mode the first malformed line is the
/// error; in skip mode malformed lines are collected in `bad_lines`.
pub fn ingest_graph6(path: &Path, opts: IngestOptions) -> Result<Ingested, IngestError> {
    let file = File::open(path).map_err(IngestError::Io)?;
    ingest_reader(BufReader::new(file), opts)
}

pub fn ingest_reader<R: BufRead>(reader: R, opts: IngestOptions) -> Result<Ingested, IngestError> {
    let mut out = Ingested::default();
    for item in Graph6Lines::new(reader) {
        match item {
            Ok(g) if opts.connected_only && !g.is_connected() => out.disconnected += 1,
            Ok(g) => out.graphs.push(g),
            Err(IngestError::Line(e)) if opts.skip_bad_lines => out.bad_lines.push(e),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
