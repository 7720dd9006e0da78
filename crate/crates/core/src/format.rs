//! Line-oriented text formats for graphs and path decompositions.
//!
//! Graph:
//!
//! ```text
//! n <vertex count>
//! e <u> <v>            one line per edge
//! l <v> <c>,<c>,...    optional; a list line on any vertex gives every vertex a list
//! ```
//!
//! Decomposition:
//!
//! ```text
//! pd <bag count>
//! b <v> <v> ...        one line per bag, in path order
//! ```
//!
//! Fields are separated by single spaces, lines end with LF, and blank lines
//! or lines starting with `#` are ignored on input. The writers emit edges
//! sorted with `u < v`, bag members ascending, and, when the graph has lists,
//! a list line for every vertex.

use crate::error::{Error, Result};
use crate::graph::{ColourSet, Graph, LIST_UNIVERSE};
use crate::width::PathDecomposition;

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    if let Some(lists) = g.lists() {
        for (v, list) in lists.iter().enumerate() {
            out.push_str(&format!("l {v} {list}\n"));
        }
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(i, line)| (i, line.split_whitespace().collect()))
}

fn parse_error(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn number(line: usize, field: &str, token: Option<&&str>) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing field `{field}`")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("field `{field}` is not a non-negative integer: {token:?}")))
}

fn expect_arity(line: usize, fields: &[&str], arity: usize) -> Result<()> {
    if fields.len() != arity {
        return Err(parse_error(
            line,
            format!("`{}` line takes {} fields, found {}", fields[0], arity - 1, fields.len() - 1),
        ));
    }
    Ok(())
}

/// Parses the count line `<keyword> <count>` that must open a document.
fn header<'a, I>(lines: &mut I, keyword: &str) -> Result<usize>
where
    I: Iterator<Item = (usize, Vec<&'a str>)>,
{
    let (line, fields) = lines
        .next()
        .ok_or_else(|| parse_error(1, format!("missing `{keyword}` header")))?;
    if fields[0] != keyword {
        return Err(parse_error(line, format!("expected `{keyword}` header, found `{}`", fields[0])));
    }
    expect_arity(line, &fields, 2)?;
    number(line, "count", fields.get(1))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let n = header(&mut lines, "n")?;
    let mut edges = Vec::new();
    let mut lists: Option<Vec<ColourSet>> = None;
    let mut listed = vec![false; n];
    let mut seen = std::collections::HashSet::new();
    for (line, fields) in lines {
        match fields[0] {
            "e" => {
                expect_arity(line, &fields, 3)?;
                let u = number(line, "u", fields.get(1))?;
                let v = number(line, "v", fields.get(2))?;
                if u >= n || v >= n {
                    return Err(parse_error(line, format!("edge endpoint outside 0..{n}")));
                }
                if u == v {
                    return Err(parse_error(line, format!("self-loop at vertex {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_error(line, format!("duplicate edge {u}-{v}")));
                }
                edges.push((u, v));
            }
            "l" => {
                expect_arity(line, &fields, 3)?;
                let v = number(line, "v", fields.get(1))?;
                if v >= n {
                    return Err(parse_error(line, format!("list vertex outside 0..{n}")));
                }
                if std::mem::replace(&mut listed[v], true) {
                    return Err(parse_error(line, format!("second list for vertex {v}")));
                }
                let list = parse_list(line, fields[2])?;
                lists.get_or_insert_with(|| vec![LIST_UNIVERSE; n])[v] = list;
            }
            other => return Err(parse_error(line, format!("unknown line kind `{other}`"))),
        }
    }
    let g = Graph::new(n, edges).expect("edges checked line by line");
    Ok(match lists {
        Some(lists) => g.with_lists(lists).expect("lists checked line by line"),
        None => g,
    })
}

fn parse_list(line: usize, token: &str) -> Result<ColourSet> {
    let mut set = ColourSet::EMPTY;
    for part in token.split(',') {
        let c: u8 = part
            .parse()
            .map_err(|_| parse_error(line, format!("field `colours` has a non-integer entry {part:?}")))?;
        if !(1..=3).contains(&c) {
            return Err(parse_error(line, format!("field `colours` has colour {c} outside 1..=3")));
        }
        set.insert(c);
    }
    Ok(set)
}

pub fn write_decomposition(d: &PathDecomposition) -> String {
    let mut out = format!("pd {}\n", d.bags.len());
    for bag in &d.bags {
        out.push('b');
        for v in bag {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

pub fn parse_decomposition(text: &str) -> Result<PathDecomposition> {
    let mut lines = content_lines(text);
    let count = header(&mut lines, "pd")?;
    let mut bags = Vec::with_capacity(count);
    let mut last = 1;
    for (line, fields) in lines {
        last = line;
        if fields[0] != "b" {
            return Err(parse_error(line, format!("expected `b` line, found `{}`", fields[0])));
        }
        let bag = fields[1..]
            .iter()
            .map(|t| number(line, "vertex", Some(t)))
            .collect::<Result<Vec<_>>>()?;
        bags.push(bag);
    }
    if bags.len() != count {
        return Err(parse_error(last, format!("header announces {count} bags, found {}", bags.len())));
    }
    Ok(PathDecomposition::new(bags))
}
