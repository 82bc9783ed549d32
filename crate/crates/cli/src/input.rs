//! Graph and vertex-set arguments.

use std::path::Path;

use anyhow::{bail, Context, Result};
use mvis::{edgelist, FamilySpec, Graph, VertexSet};

/// A graph argument is an edge-list file if one exists at that path, and a
/// family spec string such as `grid:6x5` otherwise.
pub fn load_graph(arg: &str) -> Result<Graph> {
    if Path::new(arg).is_file() {
        return edgelist::read_file(arg).with_context(|| format!("reading {arg}"));
    }
    let spec: FamilySpec = arg
        .parse()
        .with_context(|| format!("{arg:?} is neither a file nor a family spec"))?;
    Ok(spec.generate()?)
}

/// Splits on commas and whitespace outside parentheses.
fn tokens(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut begin) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ' ' | '\t' if depth == 0 => {
                out.push(&s[begin..i]);
                begin = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[begin..]);
    out.into_iter().filter(|t| !t.is_empty()).collect()
}

/// Parses `0,3,7` or `(1,1),(2,1)` (or a mix). Non-numeric tokens are looked
/// up among the vertex labels, after removing spaces inside parentheses.
pub fn parse_set(g: &Graph, s: &str) -> Result<VertexSet> {
    let mut ids = Vec::new();
    for tok in tokens(s) {
        let id = match tok.parse::<usize>() {
            Ok(id) => id,
            Err(_) => {
                let label: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
                match g.vertex_by_label(&label) {
                    Some(id) => id,
                    None => bail!("no vertex labelled {label:?}"),
                }
            }
        };
        ids.push(id);
    }
    Ok(VertexSet::from_vertices(g.n(), ids)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets_from_ids_and_coordinates() {
        let g = load_graph("grid:4x3").unwrap();
        assert_eq!(parse_set(&g, "0, 5,11").unwrap().to_vec(), vec![0, 5, 11]);
        assert_eq!(parse_set(&g, "(1,1),(2, 3) (4,3)").unwrap().to_vec(), vec![0, 5, 11]);
        assert!(parse_set(&g, "(5,1)").is_err());
        assert!(parse_set(&g, "12").is_err());
        let gn = load_graph("gn:2").unwrap();
        assert_eq!(parse_set(&gn, "u,z2").unwrap().to_vec(), vec![0, 6]);
    }
}
