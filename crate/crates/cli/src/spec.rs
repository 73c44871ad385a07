//! Graph arguments: `family:order` tokens, edge-list files and graph6 literals.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use penergy::graph::{named_graph, Family, Graph};
use penergy::graph6::parse_graph6;

use crate::CliError;

/// A graph named on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Named { family: Family, order: usize },
    EdgeList(String),
    Graph6(String),
}

impl FromStr for GraphSpec {
    type Err = CliError;

    /// `star:7` is a named graph. Otherwise an existing file is read as an
    /// edge list, and anything else is taken as a graph6 literal. graph6
    /// never uses `:`, so the forms cannot collide.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((family, order)) = s.split_once(':') {
            let family = Family::from_str(family)
                .map_err(|_| CliError::Parse(format!("unknown graph family {family:?}")))?;
            let order = order
                .parse()
                .map_err(|_| CliError::Parse(format!("bad order {order:?} in {s:?}")))?;
            return Ok(GraphSpec::Named { family, order });
        }
        if Path::new(s).is_file() {
            return Ok(GraphSpec::EdgeList(s.to_owned()));
        }
        Ok(GraphSpec::Graph6(s.to_owned()))
    }
}

impl GraphSpec {
    pub fn resolve(&self) -> Result<Graph, CliError> {
        match self {
            GraphSpec::Named { family, order } => named_graph(*family, *order)
                .map_err(|e| CliError::Parse(format!("{family}:{order}: {e}"))),
            GraphSpec::EdgeList(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
                parse_edge_list(&text).map_err(|e| CliError::Parse(format!("{path}: {e}")))
            }
            GraphSpec::Graph6(text) => {
                parse_graph6(text).map_err(|e| CliError::Parse(format!("graph6 {text:?}: {e}")))
            }
        }
    }
}

/// Edge list: one `u v` pair of 0-based vertices per line, `#` comments, and
/// an optional `n <order>` line for isolated trailing vertices. Without it
/// the order is one more than the largest vertex.
pub fn parse_edge_list(text: &str) -> Result<Graph, String> {
    let mut order = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("line {}: expected a vertex number, got {t:?}", k + 1))
        };
        match fields.as_slice() {
            ["n", value] => order = Some(number(value)?),
            [u, v] => edges.push((number(u)?, number(v)?)),
            _ => return Err(format!("line {}: expected `u v` or `n <order>`", k + 1)),
        }
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let order = order.unwrap_or(inferred);
    if order == 0 {
        return Err("edge list names no vertices".into());
    }
    Graph::from_edges(order, &edges).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_tokens() {
        let spec: GraphSpec = "star:7".parse().unwrap();
        assert_eq!(
            spec,
            GraphSpec::Named {
                family: Family::Star,
                order: 7
            }
        );
        assert_eq!(spec.resolve().unwrap().size(), 6);
        assert!("wheel:5".parse::<GraphSpec>().is_err());
        assert!("star:x".parse::<GraphSpec>().is_err());
        assert!("cycle:2".parse::<GraphSpec>().unwrap().resolve().is_err());
    }

    #[test]
    fn graph6_literals() {
        let g = "BW".parse::<GraphSpec>().unwrap().resolve().unwrap();
        assert_eq!((g.order(), g.size()), (3, 2));
        assert!("A".parse::<GraphSpec>().unwrap().resolve().is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# triangle\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!((g.order(), g.size()), (3, 3));
        let g = parse_edge_list("n 5\n0 1 # one edge\n").unwrap();
        assert_eq!((g.order(), g.size()), (5, 1));
        assert!(parse_edge_list("0 0\n").is_err());
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("\n").is_err());
    }
}
