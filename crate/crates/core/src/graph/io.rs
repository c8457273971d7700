//! Graph text format.
//!
//! ```text
//! c optional comment lines
//! p <n> <m>
//! e <i> <j>      (m lines, 1-based vertices)
//! l <i>          (loops, looped graphs only)
//! ```

use std::fmt::Write as _;

use super::{LoopGraph, SimpleGraph};
use crate::error::{Error, Result};

struct Parsed {
    n: usize,
    edges: Vec<(usize, usize, usize)>,
    loops: Vec<(usize, usize)>,
}

fn parse(text: &str) -> Result<Parsed> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let mut tok = raw.split_whitespace();
        let Some(tag) = tok.next() else { continue };
        if tag == "c" {
            continue;
        }
        let nums: Vec<usize> = tok
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("'{t}' is not a nonnegative integer"))))
            .collect::<Result<_>>()?;
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(err("duplicate 'p' line".into()));
                }
                if nums.len() != 2 {
                    return Err(err("expected 'p <n> <m>'".into()));
                }
                header = Some((nums[0], nums[1], line));
            }
            "e" => {
                let (n, _, _) = header.ok_or_else(|| err("'e' before 'p' line".into()))?;
                if nums.len() != 2 {
                    return Err(err("expected 'e <i> <j>'".into()));
                }
                for &v in &nums {
                    if v == 0 || v > n {
                        return Err(err(format!("vertex {v} out of range 1..={n}")));
                    }
                }
                edges.push((nums[0] - 1, nums[1] - 1, line));
            }
            "l" => {
                let (n, _, _) = header.ok_or_else(|| err("'l' before 'p' line".into()))?;
                if nums.len() != 1 {
                    return Err(err("expected 'l <i>'".into()));
                }
                if nums[0] == 0 || nums[0] > n {
                    return Err(err(format!("vertex {} out of range 1..={n}", nums[0])));
                }
                loops.push((nums[0] - 1, line));
            }
            other => return Err(err(format!("unknown line tag '{other}'"))),
        }
    }
    let (n, m, hline) = header.ok_or(Error::Parse { line: 0, msg: "missing 'p' line".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges but {} 'e' lines follow", edges.len()),
        });
    }
    Ok(Parsed { n, edges, loops })
}

pub fn read_simple_graph(text: &str) -> Result<SimpleGraph> {
    let p = parse(text)?;
    if let Some(&(_, line)) = p.loops.first() {
        return Err(Error::Parse { line, msg: "loops are not allowed in a simple graph".into() });
    }
    let mut g = SimpleGraph::empty(p.n)?;
    for (i, j, line) in p.edges {
        if i == j {
            return Err(Error::Parse { line, msg: "loops are not allowed in a simple graph".into() });
        }
        g.add_edge(i, j)?;
    }
    Ok(g)
}

pub fn read_loop_graph(text: &str) -> Result<LoopGraph> {
    let p = parse(text)?;
    let mut h = LoopGraph::empty(p.n)?;
    for (i, j, _) in p.edges {
        h.add_edge(i, j)?;
    }
    for (v, _) in p.loops {
        h.add_loop(v)?;
    }
    Ok(h)
}

pub fn write_simple_graph(g: &SimpleGraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let edges = g.edges();
    let _ = writeln!(out, "p {} {}", g.n(), edges.len());
    for (i, j) in edges {
        let _ = writeln!(out, "e {} {}", i + 1, j + 1);
    }
    out
}

pub fn write_loop_graph(h: &LoopGraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let all = h.edges();
    let edges: Vec<_> = all.iter().filter(|(i, j)| i != j).collect();
    let _ = writeln!(out, "p {} {}", h.n(), edges.len());
    for (i, j) in edges {
        let _ = writeln!(out, "e {} {}", i + 1, j + 1);
    }
    for (i, _) in all.iter().filter(|(i, j)| i == j) {
        let _ = writeln!(out, "l {}", i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reads_with_comments_and_blank_lines() {
        let text = "c a path\n\np 3 2\ne 1 2\ne 2 3\n";
        let g = read_simple_graph(text).unwrap();
        assert_eq!(g, SimpleGraph::path(3).unwrap());
    }

    #[test]
    fn reports_line_numbers() {
        let err = read_simple_graph("p 3 1\ne 1 4\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, msg: "vertex 4 out of range 1..=3".into() });
        let err = read_simple_graph("p 3 2\ne 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = read_simple_graph("p 2 0\nl 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = read_simple_graph("e 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(matches!(read_simple_graph("p 3 x\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn loop_graph_round_trip() {
        let h = SimpleGraph::cycle(5).unwrap().star_graph().unwrap();
        let text = write_loop_graph(&h, Some("wheel"));
        assert!(text.starts_with("c wheel\np 6 10\n"));
        assert!(text.ends_with("l 6\n"));
        assert_eq!(read_loop_graph(&text).unwrap(), h);
    }

    proptest! {
        #[test]
        fn simple_graph_round_trip(n in 1usize..9, seed in any::<u64>()) {
            let mut g = SimpleGraph::empty(n).unwrap();
            let mut s = seed;
            for i in 0..n {
                for j in i + 1..n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                    if s >> 63 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let text = write_simple_graph(&g, None);
            prop_assert_eq!(read_simple_graph(&text).unwrap(), g);
        }
    }
}
