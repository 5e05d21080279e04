//! Line-oriented text formats for instances and colorings.
//!
//! Instances:
//!
//! ```text
//! # comment
//! p multicycle 5
//! m 1 1 1 1 1
//! ```
//!
//! `p multipath <len>` with one `m` line, or `p multigraph <nv> <ne>` followed
//! by `ne` lines `e <u> <v>` with 0-indexed vertices.
//!
//! A coloring document starts with `multisum-coloring 1`, echoes the
//! instance, lists the summary fields and ends with one record per edge,
//! sorted by edge id:
//!
//! ```text
//! f <bundle-or-index> <copy> <u> <v> <color>
//! ```

use std::fmt::Write as _;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Instance, Multicycle, Multigraph, Multipath, Topology};

pub const COLORING_HEADER: &str = "multisum-coloring 1";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number<T: std::str::FromStr>(line: usize, word: &str, what: &str) -> Result<T> {
    word.parse()
        .map_err(|_| parse_err(line, format!("{what}: expected a non-negative integer, got {word:?}")))
}

fn numbers(line: usize, words: &[&str], what: &str) -> Result<Vec<usize>> {
    words.iter().map(|w| number(line, w, what)).collect()
}

/// Builds an instance from already tokenized `p`/`m`/`e` lines.
fn instance_from_lines(lines: &[(usize, Vec<&str>)]) -> Result<Instance> {
    let Some((pline, p)) = lines.first() else {
        return Err(parse_err(0, "missing problem line \"p <kind> ...\""));
    };
    let pline = *pline;
    if p[0] != "p" || p.len() < 2 {
        return Err(parse_err(pline, "expected a problem line \"p <kind> ...\""));
    }
    let rest = &lines[1..];
    let inst = match p[1] {
        "multicycle" | "multipath" => {
            if p.len() != 3 {
                return Err(parse_err(pline, format!("expected \"p {} <size>\"", p[1])));
            }
            let size: usize = number(pline, p[2], "size")?;
            let [(mline, m)] = rest else {
                return Err(parse_err(
                    rest.get(1).map_or(pline, |l| l.0),
                    "expected exactly one \"m\" line after the problem line",
                ));
            };
            if m[0] != "m" {
                return Err(parse_err(*mline, format!("expected an \"m\" line, got {:?}", m[0])));
            }
            let mult = numbers(*mline, &m[1..], "multiplicity")?;
            if mult.len() != size {
                return Err(parse_err(
                    *mline,
                    format!("{} multiplicities given, problem line says {size}", mult.len()),
                ));
            }
            let built = if p[1] == "multicycle" {
                Multicycle::new(size, mult).map(Instance::Multicycle)
            } else {
                Multipath::new(mult).map(Instance::Multipath)
            };
            built.map_err(|e| parse_err(*mline, e.to_string()))?
        }
        "multigraph" => {
            if p.len() != 4 {
                return Err(parse_err(pline, "expected \"p multigraph <nv> <ne>\""));
            }
            let nv: usize = number(pline, p[2], "vertex count")?;
            let ne: usize = number(pline, p[3], "edge count")?;
            let mut edges = Vec::with_capacity(ne);
            for (line, words) in rest {
                if words[0] != "e" || words.len() != 3 {
                    return Err(parse_err(*line, "expected \"e <u> <v>\""));
                }
                edges.push((number(*line, words[1], "vertex")?, number(*line, words[2], "vertex")?));
            }
            if edges.len() != ne {
                return Err(parse_err(
                    lines.last().map_or(pline, |l| l.0),
                    format!("{} edges given, problem line says {ne}", edges.len()),
                ));
            }
            Instance::Multigraph(Multigraph::new(nv, edges).map_err(|e| parse_err(pline, e.to_string()))?)
        }
        other => return Err(parse_err(pline, format!("unknown instance kind {other:?}"))),
    };
    Ok(inst)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let lines: Vec<_> = content_lines(text).collect();
    instance_from_lines(&lines)
}

pub fn format_instance(inst: &Instance) -> String {
    let mut out = String::new();
    match inst {
        Instance::Multicycle(g) => {
            writeln!(out, "p multicycle {}", g.n()).unwrap();
            writeln!(out, "m {}", join(g.mult())).unwrap();
        }
        Instance::Multipath(g) => {
            writeln!(out, "p multipath {}", g.len()).unwrap();
            writeln!(out, "m {}", join(g.mult())).unwrap();
        }
        Instance::Multigraph(g) => {
            writeln!(out, "p multigraph {} {}", g.nv(), g.edges().len()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {u} {v}").unwrap();
            }
        }
    }
    out
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// A coloring together with its instance and the summary it claims.
#[derive(Debug, Clone, PartialEq)]
pub struct ColoringDocument {
    pub instance: Instance,
    pub algorithm: String,
    pub coloring: EdgeColoring,
    /// Summary fields as written in the file; recomputed by `new`.
    pub sum: u64,
    pub colors_used: usize,
    pub profile: Vec<usize>,
    /// Optional `(model name, value)` line.
    pub cost: Option<(String, String)>,
    /// Optional search-node count, written by the oracle.
    pub nodes: Option<u64>,
}

impl ColoringDocument {
    pub fn new(instance: Instance, algorithm: impl Into<String>, coloring: EdgeColoring) -> Self {
        let stats = coloring.stats();
        ColoringDocument {
            instance,
            algorithm: algorithm.into(),
            coloring,
            sum: stats.sum,
            colors_used: stats.colors_used,
            profile: stats.profile,
            cost: None,
            nodes: None,
        }
    }

    /// Whether the claimed summary fields agree with the records.
    pub fn summary_mismatch(&self) -> Option<String> {
        let s = self.coloring.stats();
        if s.sum != self.sum {
            return Some(format!("sum is {} but the file claims {}", s.sum, self.sum));
        }
        if s.colors_used != self.colors_used {
            return Some(format!(
                "colors_used is {} but the file claims {}",
                s.colors_used, self.colors_used
            ));
        }
        if s.profile != self.profile {
            return Some(format!(
                "profile is [{}] but the file claims [{}]",
                join(&s.profile),
                join(&self.profile)
            ));
        }
        None
    }
}

pub fn format_coloring(doc: &ColoringDocument) -> Result<String> {
    let g = &doc.instance;
    let ids = g.edge_ids();
    let ends = g.endpoints();
    if doc.coloring.len() != ids.len() {
        return Err(Error::ColoringMismatch(format!(
            "{} colors for {} edges",
            doc.coloring.len(),
            ids.len()
        )));
    }
    let mut out = String::new();
    writeln!(out, "{COLORING_HEADER}").unwrap();
    out.push_str(&format_instance(g));
    writeln!(out, "algorithm {}", doc.algorithm).unwrap();
    writeln!(out, "sum {}", doc.sum).unwrap();
    writeln!(out, "colors_used {}", doc.colors_used).unwrap();
    writeln!(out, "profile {}", join(&doc.profile)).unwrap();
    if let Some((model, value)) = &doc.cost {
        writeln!(out, "cost {model} {value}").unwrap();
    }
    if let Some(nodes) = doc.nodes {
        writeln!(out, "nodes {nodes}").unwrap();
    }
    let mut order: Vec<usize> = (0..ids.len()).collect();
    order.sort_by_key(|&e| ids[e]);
    for e in order {
        let (u, v) = ends[e];
        writeln!(
            out,
            "f {} {} {u} {v} {}",
            ids[e].major(),
            ids[e].copy(),
            doc.coloring.color(e)
        )
        .unwrap();
    }
    Ok(out)
}

pub fn parse_coloring(text: &str) -> Result<ColoringDocument> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, w)) if w.join(" ") == COLORING_HEADER => {}
        Some((line, _)) => return Err(parse_err(line, format!("expected {COLORING_HEADER:?}"))),
        None => return Err(parse_err(0, "empty coloring document")),
    }
    let mut inst_lines = Vec::new();
    let mut algorithm = None;
    let mut sum = None;
    let mut colors_used = None;
    let mut profile = None;
    let mut cost = None;
    let mut nodes = None;
    let mut records = Vec::new();
    for (line, w) in lines {
        match w[0] {
            "p" | "m" | "e" => {
                if algorithm.is_some() {
                    return Err(parse_err(line, "instance lines must precede the summary"));
                }
                inst_lines.push((line, w));
            }
            "algorithm" if w.len() == 2 => algorithm = Some(w[1].to_string()),
            "sum" if w.len() == 2 => sum = Some(number::<u64>(line, w[1], "sum")?),
            "colors_used" if w.len() == 2 => colors_used = Some(number::<usize>(line, w[1], "colors_used")?),
            "profile" => profile = Some(numbers(line, &w[1..], "profile")?),
            "cost" if w.len() == 3 => cost = Some((w[1].to_string(), w[2].to_string())),
            "nodes" if w.len() == 2 => nodes = Some(number::<u64>(line, w[1], "nodes")?),
            "f" if w.len() == 6 => {
                let nums = numbers(line, &w[1..5], "edge record")?;
                let color: Color = number(line, w[5], "color")?;
                if color == 0 {
                    return Err(parse_err(line, "colors are positive integers"));
                }
                records.push((line, nums, color));
            }
            other => return Err(parse_err(line, format!("unexpected line starting with {other:?}"))),
        }
    }
    let instance = instance_from_lines(&inst_lines)?;
    let missing = |field: &str| parse_err(0, format!("missing \"{field}\" line"));
    let ids = instance.edge_ids();
    let ends = instance.endpoints();
    let mut colors: Vec<Color> = vec![0; ids.len()];
    for (line, nums, color) in records {
        let id = match instance {
            Instance::Multigraph(_) if nums[1] == 0 => EdgeId::Index(nums[0]),
            Instance::Multigraph(_) => return Err(parse_err(line, "multigraph edges have copy 0")),
            _ => EdgeId::Bundle { bundle: nums[0], copy: nums[1] },
        };
        let Ok(e) = ids.binary_search(&id) else {
            return Err(parse_err(line, format!("no edge {id} in the instance")));
        };
        let (u, v) = ends[e];
        if (nums[2], nums[3]) != (u, v) {
            return Err(parse_err(line, format!("edge {id} joins {u} and {v}, not {} and {}", nums[2], nums[3])));
        }
        if colors[e] != 0 {
            return Err(parse_err(line, format!("edge {id} listed twice")));
        }
        colors[e] = color;
    }
    if let Some(e) = colors.iter().position(|&c| c == 0) {
        return Err(parse_err(0, format!("edge {} has no record", ids[e])));
    }
    Ok(ColoringDocument {
        instance,
        algorithm: algorithm.ok_or_else(|| missing("algorithm"))?,
        coloring: EdgeColoring::new(colors)?,
        sum: sum.ok_or_else(|| missing("sum"))?,
        colors_used: colors_used.ok_or_else(|| missing("colors_used"))?,
        profile: profile.ok_or_else(|| missing("profile"))?,
        cost,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip() {
        for text in [
            "p multicycle 5\nm 1 2 1 1 3\n",
            "p multipath 2\nm 4 1\n",
            "p multigraph 3 2\ne 0 1\ne 1 2\n",
        ] {
            let inst = parse_instance(text).unwrap();
            assert_eq!(format_instance(&inst), text);
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let inst = parse_instance("# a triangle\n\np multicycle 3 # n\nm 1 1 1\n").unwrap();
        assert_eq!(inst, Instance::Multicycle(Multicycle::new(3, vec![1, 1, 1]).unwrap()));
    }

    #[test]
    fn rejects_malformed() {
        let bad = [
            "",
            "p multicycle 2\nm 1 1\n",
            "p multicycle 3\nm 1 1\n",
            "p multicycle 3\nm 1 0 1\n",
            "p multicycle 3\nm 1 x 1\n",
            "p triangle 3\n",
            "p multigraph 2 2\ne 0 1\n",
            "p multigraph 2 1\ne 0 0\n",
            "p multigraph 2 1\ne 0 5\n",
        ];
        for text in bad {
            assert!(matches!(parse_instance(text), Err(Error::Parse { .. })), "{text:?}");
        }
        assert_eq!(
            parse_instance("p multicycle 3\nm 1 x 1\n").unwrap_err(),
            Error::Parse { line: 2, msg: "multiplicity: expected a non-negative integer, got \"x\"".into() }
        );
    }

    #[test]
    fn coloring_round_trip() {
        let inst = parse_instance("p multicycle 3\nm 2 1 1\n").unwrap();
        let f = EdgeColoring::new(vec![1, 2, 3, 4]).unwrap();
        let mut doc = ColoringDocument::new(inst, "general", f);
        doc.cost = Some(("sum".into(), "10".into()));
        let text = format_coloring(&doc).unwrap();
        assert!(text.contains("f 0 1 0 1 2\n"));
        assert!(text.contains("profile 1 1 1 1\n"));
        let back = parse_coloring(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.summary_mismatch(), None);
    }

    #[test]
    fn tampered_summary_is_reported_not_rejected() {
        let inst = parse_instance("p multipath 1\nm 2\n").unwrap();
        let doc = ColoringDocument::new(inst, "path", EdgeColoring::new(vec![1, 2]).unwrap());
        let text = format_coloring(&doc).unwrap().replace("sum 3", "sum 2");
        assert!(parse_coloring(&text).unwrap().summary_mismatch().is_some());
    }

    #[test]
    fn coloring_structure_errors() {
        let inst = parse_instance("p multipath 1\nm 2\n").unwrap();
        let doc = ColoringDocument::new(inst, "path", EdgeColoring::new(vec![1, 2]).unwrap());
        let text = format_coloring(&doc).unwrap();
        for bad in [
            text.replace("f 0 1 0 1 2\n", ""),
            text.replace("f 0 1 0 1 2", "f 0 0 0 1 2"),
            text.replace("f 0 1 0 1 2", "f 0 1 1 2 2"),
            text.replace("f 0 1 0 1 2", "f 0 1 0 1 0"),
            text.replace(COLORING_HEADER, "coloring"),
        ] {
            assert!(matches!(parse_coloring(&bad), Err(Error::Parse { .. })), "{bad}");
        }
    }
}
