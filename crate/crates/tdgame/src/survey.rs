//! Batch invariant surveys over graph corpora, with JSON-lines and CSV
//! sinks.
//!
//! Rows are computed in parallel but always written in corpus order.

use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use tdgame_core::enumerate::{isolate_free_graphs, random_isolate_free_graph};
use tdgame_core::verify::SurveyRow;
use tdgame_core::Graph;

use crate::format::{parse_graph, split_payloads, GraphFormat, GraphText, ParseError};

/// Draws allowed per random graph before giving up on an isolate-free one.
pub const MAX_DRAWS: usize = 10_000;

pub const CSV_HEADER: [&str; 11] =
    ["graph", "n", "gt", "ugt", "gti", "gtg", "grt", "ooir", "nui", "bipartite", "violations"];

#[derive(Clone, Debug, PartialEq)]
pub enum Corpus {
    /// Every isolate-free graph of order `n`, up to isomorphism.
    Exhaustive(usize),
    /// `count` isolate-free draws from `G(n, p)`.
    Random {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    File {
        path: PathBuf,
        format: GraphFormat,
    },
}

impl Corpus {
    /// Parses the `n,p,count,seed` form used on the command line.
    pub fn random_from_str(s: &str) -> Result<Corpus, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, p, count, seed] = parts[..] else {
            return Err(format!("expected n,p,count,seed, found `{s}`"));
        };
        let field = |name: &str, v: &str| format!("bad {name} `{v}`");
        let p: f64 = p.parse().map_err(|_| field("p", p))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(format!("edge probability {p} is not in [0, 1]"));
        }
        Ok(Corpus::Random {
            n: n.parse().map_err(|_| field("n", n))?,
            p,
            count: count.parse().map_err(|_| field("count", count))?,
            seed: seed.parse().map_err(|_| field("seed", seed))?,
        })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SurveyError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}, graph {index}: {source}")]
    Parse { path: PathBuf, index: usize, source: ParseError },
    #[error("{graph}: {source}")]
    Solver { graph: String, source: tdgame_core::Error },
    #[error(transparent)]
    Core(#[from] tdgame_core::Error),
    #[error("writing report: {0}")]
    Write(#[from] io::Error),
    #[error("writing report: {0}")]
    Csv(#[from] csv::Error),
}

/// Named graphs of a corpus, plus the number of random draws rejected for
/// containing an isolated vertex.
#[derive(Clone, Debug)]
pub struct LoadedCorpus {
    pub graphs: Vec<(String, Graph)>,
    pub rejected: usize,
}

pub fn load_corpus(corpus: &Corpus) -> Result<LoadedCorpus, SurveyError> {
    let mut rejected = 0;
    let graphs = match corpus {
        Corpus::Exhaustive(n) => isolate_free_graphs(*n)?
            .into_iter()
            .enumerate()
            .map(|(i, g)| (format!("exhaustive{n}#{i}"), g))
            .collect(),
        &Corpus::Random { n, p, count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::with_capacity(count);
            for i in 0..count {
                let (g, r) = random_isolate_free_graph(n, p, &mut rng, MAX_DRAWS)?;
                rejected += r;
                out.push((format!("random{n}p{p}s{seed}#{i}"), g));
            }
            out
        }
        Corpus::File { path, format } => {
            let text = std::fs::read_to_string(path)
                .map_err(|source| SurveyError::Read { path: path.clone(), source })?;
            let stem = path.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            split_payloads(&text, *format)
                .into_iter()
                .enumerate()
                .map(|(index, payload)| {
                    parse_graph(&GraphText::new(*format, payload))
                        .map(|g| (format!("{stem}#{index}"), g))
                        .map_err(|source| SurveyError::Parse { path: path.clone(), index, source })
                })
                .collect::<Result<_, _>>()?
        }
    };
    Ok(LoadedCorpus { graphs, rejected })
}

/// Solves every graph; rows come back in input order.
pub fn survey(graphs: &[(String, Graph)]) -> Result<Vec<SurveyRow>, SurveyError> {
    graphs
        .par_iter()
        .map(|(name, g)| {
            SurveyRow::compute(name.clone(), g)
                .map_err(|source| SurveyError::Solver { graph: name.clone(), source })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Json,
    Csv,
}

impl FromStr for Emit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Emit::Json),
            "csv" => Ok(Emit::Csv),
            _ => Err(format!("unknown sink `{s}` (expected json or csv)")),
        }
    }
}

impl fmt::Display for Emit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Emit::Json => "json",
            Emit::Csv => "csv",
        })
    }
}

#[derive(Serialize)]
struct JsonRow<'a> {
    graph: &'a str,
    n: usize,
    gt: usize,
    ugt: usize,
    gti: usize,
    gtg: usize,
    grt: usize,
    ooir: usize,
    nui: usize,
    bipartite: bool,
    violations: &'a [&'static str],
}

impl<'a> From<&'a SurveyRow> for JsonRow<'a> {
    fn from(r: &'a SurveyRow) -> Self {
        let p = &r.profile;
        JsonRow {
            graph: &r.graph,
            n: r.n,
            gt: p.gt,
            ugt: p.ugt,
            gti: p.gti,
            gtg: p.gtg,
            grt: p.grt,
            ooir: p.ooir,
            nui: p.nui,
            bipartite: p.bipartite,
            violations: &r.violations,
        }
    }
}

/// JSON: one object per line. CSV: the fixed header, then one record per
/// row with violations joined by `;`.
pub fn write_rows<W: Write>(rows: &[SurveyRow], emit: Emit, mut out: W) -> Result<(), SurveyError> {
    match emit {
        Emit::Json => {
            for r in rows {
                serde_json::to_writer(&mut out, &JsonRow::from(r)).map_err(io::Error::from)?;
                out.write_all(b"\n")?;
            }
        }
        Emit::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut out);
            w.write_record(CSV_HEADER)?;
            for r in rows {
                let p = &r.profile;
                let nums = [r.n, p.gt, p.ugt, p.gti, p.gtg, p.grt, p.ooir, p.nui];
                let mut record = vec![r.graph.clone()];
                record.extend(nums.iter().map(usize::to_string));
                record.push(p.bipartite.to_string());
                record.push(r.violations.join(";"));
                w.write_record(&record)?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tdgame_core::{family, FamilySpec};

    fn rows_for(specs: &[&str]) -> Vec<SurveyRow> {
        let graphs: Vec<(String, Graph)> = specs
            .iter()
            .map(|s| (s.to_string(), family(&s.parse::<FamilySpec>().unwrap()).unwrap()))
            .collect();
        survey(&graphs).unwrap()
    }

    #[test]
    fn exhaustive_four_passes() {
        let corpus = load_corpus(&Corpus::Exhaustive(4)).unwrap();
        assert_eq!(corpus.graphs.len(), 7);
        let rows = survey(&corpus.graphs).unwrap();
        assert!(rows.iter().all(SurveyRow::passes));
    }

    #[test]
    fn empty_corpus() {
        let rows = survey(&[]).unwrap();
        assert!(rows.is_empty());
        let mut buf = Vec::new();
        write_rows(&rows, Emit::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "graph,n,gt,ugt,gti,gtg,grt,ooir,nui,bipartite,violations\n"
        );
        let mut buf = Vec::new();
        write_rows(&rows, Emit::Json, &mut buf).unwrap();
        assert!(buf.is_empty());
    }

    #[test]
    fn sinks_render_rows() {
        let rows = rows_for(&["path:4", "cycle:5"]);
        let mut csv = Vec::new();
        write_rows(&rows, Emit::Csv, &mut csv).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        assert_eq!(csv.lines().nth(1).unwrap(), "path:4,4,2,2,2,3,4,2,1,true,");
        let mut json = Vec::new();
        write_rows(&rows, Emit::Json, &mut json).unwrap();
        let first: serde_json::Value =
            serde_json::from_str(String::from_utf8(json).unwrap().lines().next().unwrap()).unwrap();
        assert_eq!(first["graph"], "path:4");
        assert_eq!(first["gti"], 2);
        assert_eq!(first["violations"], serde_json::json!([]));
    }

    #[test]
    fn random_corpus_is_reproducible() {
        let c = Corpus::random_from_str("8,0.3,20,11").unwrap();
        let a = load_corpus(&c).unwrap();
        let b = load_corpus(&c).unwrap();
        assert_eq!(a.graphs, b.graphs);
        assert_eq!(a.rejected, b.rejected);
        assert!(a.graphs.iter().all(|(_, g)| g.is_isolate_free()));
        assert!(Corpus::random_from_str("8,1.5,2,1").is_err());
        assert!(Corpus::random_from_str("8,0.5,2").is_err());
    }
}
