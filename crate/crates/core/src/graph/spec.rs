//! Text specs for graphs, used by the CLI and the verification harness.
//!
//! ```text
//! spec  := family ':' int
//!        | 'copies(' int ',' spec ')'
//!        | 'complement(' spec ')'
//!        | 'prod(' kind ',' spec ',' spec ')'
//!        | 'blown(' kind ',' spec ',' spec ',' int ',' bit ',' bit ',' bit ',' bit ')'
//! kind  := 'match' | 'antimatch' | 'half'
//! ```

use super::families::{blown_product, copies, make_family, product, LinkMatrix, ProductKind};
use super::Graph;
use crate::error::{Error, Result};

pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let s = spec.trim();
    if let Some(open) = s.find('(') {
        let name = s[..open].trim();
        let inner = s[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::input(format!("unbalanced parentheses in {s:?}")))?;
        let args = split_top_level(inner)?;
        let int = |a: &str| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::input(format!("expected an integer, got {a:?}")))
        };
        return match (name, args.as_slice()) {
            ("copies", [t, g]) => copies(int(t)?, &parse_graph_spec(g)?),
            ("complement", [g]) => Ok(parse_graph_spec(g)?.complement()),
            ("prod", [k, g, h]) => product(
                &parse_graph_spec(g)?,
                &parse_graph_spec(h)?,
                k.parse::<ProductKind>()?,
            ),
            ("blown", [k, g, h, t, a, b, c, d]) => {
                let bit = |x: &str| Ok::<u8, Error>(int(x)?.min(255) as u8);
                blown_product(
                    &parse_graph_spec(g)?,
                    &parse_graph_spec(h)?,
                    k.parse::<ProductKind>()?,
                    int(t)?,
                    LinkMatrix::from_bits(bit(a)?, bit(b)?, bit(c)?, bit(d)?)?,
                )
            }
            _ => Err(Error::input(format!(
                "cannot parse {s:?}: unknown constructor {name:?} or wrong arity"
            ))),
        };
    }
    let mut parts = s.split(':');
    let name = parts.next().unwrap_or("").trim();
    let params = parts
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::input(format!("bad parameter {p:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    make_family(name, &params)
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::input(format!("unbalanced parentheses in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::input(format!("unbalanced parentheses in {s:?}")));
    }
    out.push(&s[start..]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{path, subdivided_star};

    #[test]
    fn parses_families_and_products() {
        assert_eq!(parse_graph_spec("path:4").unwrap(), path(4).unwrap());
        assert_eq!(
            parse_graph_spec("subdiv_star:3").unwrap(),
            subdivided_star(3).unwrap()
        );
        assert_eq!(
            parse_graph_spec("prod(half, edgeless:2, edgeless:2)").unwrap(),
            path(4).unwrap().permute(&[0, 2, 1, 3])
        );
        let g = parse_graph_spec("blown(match, complete:4, edgeless:4, 3, 0,1,0,1)").unwrap();
        assert_eq!(g.n(), 24);
        let c = parse_graph_spec("copies(2, subdiv_star:2)").unwrap();
        assert_eq!(c.n(), 10);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_graph_spec("prod(half, path:2)").is_err());
        assert!(parse_graph_spec("blown(match, complete:2, edgeless:2, 2, 0,2,0,0)").is_err());
        assert!(parse_graph_spec("copies(2, path:2").is_err());
        assert!(parse_graph_spec("nope:3").is_err());
    }
}
