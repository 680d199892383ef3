use thiserror::Error;

use super::{bit, Graph, GraphError};

/// graph6 with a single size byte covers `n <= 62`.
pub const MAX_GRAPH6_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {offset}: invalid size byte {byte}")]
    InvalidSizeByte { offset: usize, byte: u8 },
    #[error(
        "byte {offset}: graphs with more than {MAX_GRAPH6_VERTICES} vertices are not supported"
    )]
    UnsupportedSize { offset: usize },
    #[error("byte {offset}: character {byte} outside the printable range 63..=126")]
    InvalidCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: input ends early, {expected} bytes expected")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing data after the adjacency payload")]
    TrailingGarbage { offset: usize },
}

impl Graph {
    /// Decodes one graph6 line. A trailing line terminator is ignored.
    pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
        let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
        let &size = bytes.first().ok_or(Graph6Error::Empty)?;
        if size == 126 {
            return Err(Graph6Error::UnsupportedSize { offset: 0 });
        }
        if !(63..126).contains(&size) {
            return Err(Graph6Error::InvalidSizeByte {
                offset: 0,
                byte: size,
            });
        }
        let n = (size - 63) as usize;
        let pairs = n * n.saturating_sub(1) / 2;
        let expected = 1 + pairs.div_ceil(6);
        for (offset, &b) in bytes.iter().enumerate().skip(1) {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::InvalidCharacter { offset, byte: b });
            }
        }
        if bytes.len() < expected {
            return Err(Graph6Error::Truncated {
                offset: bytes.len(),
                expected,
            });
        }
        if bytes.len() > expected {
            return Err(Graph6Error::TrailingGarbage { offset: expected });
        }
        let payload = &bytes[1..];
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let group = payload[k / 6] - 63;
                if group & (1 << (5 - k % 6)) != 0 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                k += 1;
            }
        }
        Ok(Graph::from_rows(rows))
    }

    /// Canonical graph6 encoding with a zero-padded final group.
    pub fn to_graph6(&self) -> Result<String, Graph6Error> {
        let n = self.n();
        if n > MAX_GRAPH6_VERTICES {
            return Err(Graph6Error::UnsupportedSize { offset: 0 });
        }
        let pairs = n * n.saturating_sub(1) / 2;
        let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
        out.push(63 + n as u8);
        let mut group = 0u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                group <<= 1;
                if self.has_edge(i, j) {
                    group |= 1;
                }
                k += 1;
                if k % 6 == 0 {
                    out.push(63 + group);
                    group = 0;
                }
            }
        }
        if k % 6 != 0 {
            out.push(63 + (group << (6 - k % 6)));
        }
        Ok(String::from_utf8(out).expect("graph6 is ASCII"))
    }
}

/// Parses the edge-list text format: first line `n`, then one `u v` pair per
/// line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(GraphError::EdgeList {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| GraphError::EdgeList {
        line,
        message: format!("expected a vertex count, found `{header}`"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let parsed = match parts.as_slice() {
            [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
            _ => None,
        };
        let (u, v) = parsed.ok_or_else(|| GraphError::EdgeList {
            line,
            message: format!("expected `u v`, found `{l}`"),
        })?;
        edges.push((u, v));
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_reference_strings() {
        assert_eq!(
            Graph::parse_graph6("D??").unwrap(),
            Graph::empty(5).unwrap()
        );
        assert_eq!(Graph::parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(Graph::parse_graph6("Bg").unwrap(), Graph::path(3));
        assert_eq!(Graph::parse_graph6("Bg\n").unwrap(), Graph::path(3));
        assert_eq!(Graph::parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn encodes_reference_strings() {
        assert_eq!(Graph::complete(3).to_graph6().unwrap(), "Bw");
        assert_eq!(Graph::empty(5).unwrap().to_graph6().unwrap(), "D??");
        assert_eq!(Graph::empty(1).unwrap().to_graph6().unwrap(), "@");
        assert_eq!(Graph::path(3).to_graph6().unwrap(), "Bg");
        // K4: six ones fill exactly one group.
        assert_eq!(Graph::complete(4).to_graph6().unwrap(), "C~");
    }

    #[test]
    fn parse_errors_name_offsets() {
        assert_eq!(Graph::parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            Graph::parse_graph6("~??"),
            Err(Graph6Error::UnsupportedSize { offset: 0 })
        );
        assert_eq!(
            Graph::parse_graph6("!"),
            Err(Graph6Error::InvalidSizeByte {
                offset: 0,
                byte: b'!'
            })
        );
        assert_eq!(
            Graph::parse_graph6("D? "),
            Err(Graph6Error::InvalidCharacter {
                offset: 2,
                byte: b' '
            })
        );
        assert_eq!(
            Graph::parse_graph6("D?"),
            Err(Graph6Error::Truncated {
                offset: 2,
                expected: 3
            })
        );
        assert_eq!(
            Graph::parse_graph6("Bw?"),
            Err(Graph6Error::TrailingGarbage { offset: 2 })
        );
    }

    #[test]
    fn too_large_to_encode() {
        let g = Graph::empty(63).unwrap();
        assert!(g.to_graph6().is_err());
        let g = Graph::empty(62).unwrap();
        assert_eq!(Graph::parse_graph6(&g.to_graph6().unwrap()).unwrap(), g);
    }

    #[test]
    fn edge_list_text() {
        let g = parse_edge_list("3\n0 1\n1 2\n# comment\n\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(parse_edge_list("2\n").unwrap(), Graph::empty(2).unwrap());
        assert!(matches!(
            parse_edge_list("3\n0 x\n"),
            Err(GraphError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 5\n"),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(parse_edge_list("").is_err());
    }
}
