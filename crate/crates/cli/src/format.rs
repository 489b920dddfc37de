//! Plain-text file formats.
//!
//! * graph: one edge `u v` per line; a line with a single name declares a
//!   vertex. Vertex ids follow first appearance.
//! * order: one strict pair `u v` per line, meaning `u` precedes `v`.
//! * ordering: whitespace-separated vertex names.
//! * tree: `root r` on the first line, then `parent child` lines.
//!
//! `#` starts a comment in every format.

use std::collections::HashMap;

use anyhow::{bail, Context, Result};
use search_order::graph::validate_graph;
use search_order::reductions::RootedTree;
use search_order::{Graph, Ordering, PartialOrder, Vertex};

/// Non-empty lines with comments stripped, tokenized, with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, Vertex> = HashMap::new();
    let mut id = |name: &str| -> Vertex {
        *index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            names.len() - 1
        })
    };
    let mut edges = Vec::new();
    for (line, tokens) in lines(text) {
        match tokens[..] {
            [v] => {
                id(v);
            }
            [u, v] => {
                let u = id(u);
                let v = id(v);
                edges.push((u, v));
            }
            _ => bail!(
                "line {line}: expected `u v` or a single vertex, found {} names",
                tokens.len()
            ),
        }
    }
    let g = Graph::with_names(names, &edges)?;
    let report = validate_graph(&g);
    if !report.loop_free || !report.simple {
        bail!("graph is not simple: {}", report.issues.join("; "));
    }
    Ok(g)
}

/// Prints edges in id order, declaring a vertex on its own line only where
/// the edges alone would change the first-appearance order.
pub fn print_graph(g: &Graph) -> String {
    let mut out = String::new();
    let mut seen = vec![false; g.vertex_count()];
    let mut next = 0;
    let declare = |v: Vertex, out: &mut String, seen: &mut Vec<bool>| {
        out.push_str(g.name(v));
        out.push('\n');
        seen[v] = true;
    };
    for (u, v) in g.edges() {
        while next < seen.len() && seen[next] {
            next += 1;
        }
        let pending: Vec<Vertex> = (next..v).filter(|&x| !seen[x]).collect();
        if pending != [u] {
            for x in pending {
                declare(x, &mut out, &mut seen);
            }
        }
        out.push_str(&format!("{} {}\n", g.name(u), g.name(v)));
        seen[u] = true;
        seen[v] = true;
    }
    for v in g.vertices() {
        if !seen[v] {
            declare(v, &mut out, &mut seen);
        }
    }
    out
}

fn lookup(g: &Graph, name: &str, line: usize) -> Result<Vertex> {
    g.vertex(name)
        .with_context(|| format!("line {line}: unknown vertex `{name}`"))
}

pub fn parse_order(text: &str, g: &Graph) -> Result<PartialOrder> {
    let mut pairs = Vec::new();
    for (line, tokens) in lines(text) {
        let [x, y] = tokens[..] else {
            bail!("line {line}: expected `u v`, found {} names", tokens.len());
        };
        pairs.push((lookup(g, x, line)?, lookup(g, y, line)?));
    }
    PartialOrder::new(g.vertex_count(), &pairs).map_err(|e| match e {
        search_order::Error::Cycle(c) => {
            let names: Vec<&str> = c.iter().map(|&v| g.name(v)).collect();
            anyhow::anyhow!("order contains a cycle: {}", names.join(" < "))
        }
        other => other.into(),
    })
}

/// Prints the generating pairs of `pi`.
pub fn print_order(pi: &PartialOrder, g: &Graph) -> String {
    pi.generators()
        .map(|(x, y)| format!("{} {}\n", g.name(x), g.name(y)))
        .collect()
}

/// Reads the names of an ordering without a graph to resolve them.
pub fn parse_names(text: &str) -> Vec<String> {
    lines(text).flat_map(|(_, tokens)| tokens).map(str::to_string).collect()
}

pub fn parse_ordering(text: &str, g: &Graph) -> Result<Ordering> {
    let names = parse_names(text);
    let mut seq = Vec::with_capacity(names.len());
    for name in &names {
        seq.push(
            g.vertex(name)
                .with_context(|| format!("unknown vertex `{name}` in ordering"))?,
        );
    }
    Ok(Ordering::new(seq, g.vertex_count())?)
}

pub fn print_ordering(sigma: &Ordering, g: &Graph) -> String {
    let names: Vec<&str> = sigma.iter().map(|v| g.name(v)).collect();
    format!("{}\n", names.join(" "))
}

pub fn parse_tree(text: &str, g: &Graph) -> Result<RootedTree> {
    let mut rows = lines(text);
    let root = match rows.next() {
        Some((line, tokens)) => match tokens[..] {
            ["root", r] => lookup(g, r, line)?,
            _ => bail!("line {line}: expected `root r`"),
        },
        None => bail!("tree file is empty"),
    };
    let mut pairs = Vec::new();
    for (line, tokens) in rows {
        let [p, c] = tokens[..] else {
            bail!("line {line}: expected `parent child`, found {} names", tokens.len());
        };
        pairs.push((lookup(g, p, line)?, lookup(g, c, line)?));
    }
    Ok(RootedTree::from_pairs(g, root, &pairs)?)
}

pub fn print_tree(t: &RootedTree, g: &Graph) -> String {
    let mut out = format!("root {}\n", g.name(t.root));
    for (p, c) in t.edges() {
        out.push_str(&format!("{} {}\n", g.name(p), g.name(c)));
    }
    out
}
