//! Serializable run report: counts keyed by both pattern index and name,
//! optional vertex/edge profiles, trend ratios, and stage timings.
//!
//! Counts are serialized as decimal strings so 128-bit values survive
//! JSON round-trips; unavailable values (degraded mode, disconnected
//! non-induced counts) serialize as null. Identical inputs and flags
//! produce byte-identical reports, which is why stage timings are opt-in.

use serde::Serialize;

use crate::catalog::PatternCatalog;
use crate::graph::{Graph, LoadStats};
use crate::pipeline::{Analysis, Mode, SizeAnalysis};
use crate::{Error, Result};

/// Which optional sections to include in the report.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    /// Include per-vertex degree/triangle/4-cycle/4-clique profiles.
    pub vertex_profiles: bool,
    /// Include the same profiles per edge.
    pub edge_profiles: bool,
    /// Include trend ratios (requires a 5-vertex row).
    pub trends: bool,
    /// Include per-stage wall-clock timings (breaks byte-identity between
    /// repeat runs, hence opt-in).
    pub timings: bool,
}

/// One pattern's counts. `noninduced` is null for disconnected patterns
/// (not part of the report contract) and for patterns disabled in
/// degraded mode; `induced` is null when the conversion was impossible.
#[derive(Debug, Serialize)]
pub struct PatternCount {
    /// Catalog identifier, e.g. `"5-8"`.
    pub id: String,
    /// Catalog name, e.g. `"five_cycle"`.
    pub name: String,
    /// Non-induced count as a decimal string.
    pub noninduced: Option<String>,
    /// Induced count as a decimal string.
    pub induced: Option<String>,
}

/// Counts for one pattern size.
#[derive(Debug, Serialize)]
pub struct SizeReport {
    /// Pattern size, 3..=5.
    pub size: u8,
    /// Connected patterns in catalog order.
    pub connected: Vec<PatternCount>,
    /// Disconnected patterns in catalog order; null in the degraded
    /// 5-vertex row.
    pub disconnected: Option<Vec<PatternCount>>,
}

/// Per-vertex structure tallies.
#[derive(Debug, Serialize)]
pub struct VertexProfile {
    /// Dense vertex index.
    pub vertex: u32,
    /// Original input id; null for padding vertices added by
    /// `--num-vertices`.
    pub id: Option<u64>,
    /// Degree.
    pub degree: u32,
    /// Triangles containing the vertex.
    pub triangles: String,
    /// 4-cycles containing the vertex.
    pub four_cycles: String,
    /// 4-cliques containing the vertex.
    pub four_cliques: String,
}

/// Per-edge structure tallies.
#[derive(Debug, Serialize)]
pub struct EdgeProfile {
    /// Dense index of the smaller endpoint.
    pub source: u32,
    /// Dense index of the larger endpoint.
    pub target: u32,
    /// Original id of the smaller endpoint.
    pub source_id: Option<u64>,
    /// Original id of the larger endpoint.
    pub target_id: Option<u64>,
    /// Triangles containing the edge.
    pub triangles: String,
    /// 4-cycles containing the edge.
    pub four_cycles: String,
    /// 4-cliques containing the edge.
    pub four_cliques: String,
}

/// Optional profile sections.
#[derive(Debug, Serialize)]
pub struct Profiles {
    /// Per-vertex tallies, dense index order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Vec<VertexProfile>>,
    /// Per-edge tallies, canonical edge order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<Vec<EdgeProfile>>,
}

/// Edge-likelihood entry for one pattern.
#[derive(Debug, Serialize)]
pub struct TrendValue {
    /// Catalog identifier.
    pub id: String,
    /// Catalog name.
    pub name: String,
    /// 1 − C/N; null when N = 0 or either count is unavailable.
    pub value: Option<f64>,
}

/// Trend ratios mirroring the count-shape analyses the report feeds.
#[derive(Debug, Serialize)]
pub struct Trends {
    /// Per connected pattern of every computed size: the probability that
    /// a random non-induced copy carries at least one extra edge.
    pub edge_likelihood: Vec<TrendValue>,
    /// Non-induced diamonds per non-induced 4-cycle.
    pub four_cycle_diamond_closure: Option<f64>,
    /// Non-induced triangle books per non-induced K_{2,3}.
    pub k23_triangle_book_closure: Option<f64>,
    /// Induced capped 4-cliques per induced wheel.
    pub wheel_ratio_19_18: Option<f64>,
    /// Induced 5-cliques-minus-an-edge per induced wheel.
    pub wheel_ratio_20_18: Option<f64>,
    /// Induced 5-cliques-minus-an-edge per induced capped 4-clique.
    pub wheel_ratio_20_19: Option<f64>,
}

/// One stage timing row.
#[derive(Debug, Serialize)]
pub struct TimingEntry {
    /// Stage name.
    pub stage: String,
    /// Elapsed seconds.
    pub seconds: f64,
}

/// The complete serializable run report.
#[derive(Debug, Serialize)]
pub struct CountReport {
    /// Report schema version.
    pub schema: u32,
    /// Input name as given on the command line.
    pub input: String,
    /// Vertex count after normalization.
    pub n: u64,
    /// Edge count after normalization.
    pub m: u64,
    /// Self-loops dropped during loading.
    pub self_loops_dropped: u64,
    /// Duplicate edges dropped during loading.
    pub duplicate_edges_dropped: u64,
    /// Largest pattern size counted.
    pub max_pattern_size: u8,
    /// `"full"` or `"degraded"`.
    pub mode: String,
    /// Explanation when degraded.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degraded_reason: Option<String>,
    /// `"PASS"` when the oracle comparison ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_check: Option<String>,
    /// Per-size counts, ascending size.
    pub sizes: Vec<SizeReport>,
    /// Optional vertex/edge profiles.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profiles: Option<Profiles>,
    /// Optional trend ratios.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trends: Option<Trends>,
    /// Optional stage timings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<TimingEntry>>,
}

fn decimal(value: i128) -> String {
    value.to_string()
}

fn ratio(numerator: i128, denominator: i128) -> Option<f64> {
    if denominator == 0 {
        None
    } else {
        Some(numerator as f64 / denominator as f64)
    }
}

fn size_report(catalog: &PatternCatalog, row: &SizeAnalysis) -> SizeReport {
    let patterns = catalog.patterns(row.size);
    let connected_count = catalog.connected_count(row.size);
    let connected = patterns[..connected_count]
        .iter()
        .enumerate()
        .map(|(idx, pat)| PatternCount {
            id: pat.id(),
            name: pat.name.to_string(),
            noninduced: row.connected_noninduced[idx].map(decimal),
            induced: row.connected_induced.as_ref().map(|c| decimal(c[idx])),
        })
        .collect();
    let disconnected = row.disconnected_induced.as_ref().map(|disc| {
        patterns[connected_count..]
            .iter()
            .zip(disc)
            .map(|(pat, &c)| PatternCount {
                id: pat.id(),
                name: pat.name.to_string(),
                noninduced: None,
                induced: Some(decimal(c)),
            })
            .collect()
    });
    SizeReport { size: row.size, connected, disconnected }
}

fn build_profiles(
    g: &Graph,
    analysis: &Analysis,
    options: &ReportOptions,
) -> Result<Option<Profiles>> {
    if !options.vertex_profiles && !options.edge_profiles {
        return Ok(None);
    }
    let aux = analysis
        .four_aux
        .as_ref()
        .ok_or_else(|| Error::Integrity("profiles need the 4-vertex stage (size 4 or 5)".into()))?;
    let tri = &analysis.triangles;
    let vertex = options.vertex_profiles.then(|| {
        (0..g.vertex_count() as u32)
            .map(|v| VertexProfile {
                vertex: v,
                id: g.original_id(v),
                degree: g.degree(v) as u32,
                triangles: decimal(tri.per_vertex(v) as i128),
                four_cycles: decimal(aux.four_cycles.per_vertex[v as usize] as i128),
                four_cliques: decimal(aux.four_cliques.per_vertex[v as usize] as i128),
            })
            .collect()
    });
    let edge = options.edge_profiles.then(|| {
        g.edges()
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| EdgeProfile {
                source: a,
                target: b,
                source_id: g.original_id(a),
                target_id: g.original_id(b),
                triangles: decimal(tri.per_edge(e as u32) as i128),
                four_cycles: decimal(aux.four_cycles.per_edge[e] as i128),
                four_cliques: decimal(aux.four_cliques.per_edge[e] as i128),
            })
            .collect()
    });
    Ok(Some(Profiles { vertex, edge }))
}

fn build_trends(catalog: &PatternCatalog, analysis: &Analysis) -> Result<Trends> {
    let five = analysis
        .sizes
        .iter()
        .find(|row| row.size == 5)
        .ok_or_else(|| Error::Integrity("trends need a 5-vertex report".into()))?;

    let mut edge_likelihood = Vec::new();
    for row in &analysis.sizes {
        let patterns = catalog.patterns(row.size);
        for (idx, value) in row.connected_noninduced.iter().enumerate() {
            let induced = row.connected_induced.as_ref().map(|c| c[idx]);
            let likelihood = match (value, induced) {
                (Some(n), Some(c)) if *n != 0 => Some(1.0 - c as f64 / *n as f64),
                _ => None,
            };
            edge_likelihood.push(TrendValue {
                id: patterns[idx].id(),
                name: patterns[idx].name.to_string(),
                value: likelihood,
            });
        }
    }

    let four = analysis.sizes.iter().find(|row| row.size == 4);
    let four_cycle_diamond_closure =
        four.and_then(|row| match (row.connected_noninduced[4], row.connected_noninduced[3]) {
            (Some(diamonds), Some(cycles)) => ratio(diamonds, cycles),
            _ => None,
        });
    let k23_triangle_book_closure =
        match (five.connected_noninduced[13], five.connected_noninduced[12]) {
            (Some(books), Some(k23)) => ratio(books, k23),
            _ => None,
        };

    let induced5 = five.connected_induced.as_deref();
    let wheel = |num: usize, den: usize| induced5.and_then(|c| ratio(c[num], c[den]));
    Ok(Trends {
        edge_likelihood,
        four_cycle_diamond_closure,
        k23_triangle_book_closure,
        wheel_ratio_19_18: wheel(18, 17),
        wheel_ratio_20_18: wheel(19, 17),
        wheel_ratio_20_19: wheel(19, 18),
    })
}

impl CountReport {
    /// Assemble a report from a finished analysis.
    pub fn build(
        input: &str,
        g: &Graph,
        stats: &LoadStats,
        analysis: &Analysis,
        catalog: &PatternCatalog,
        options: &ReportOptions,
    ) -> Result<CountReport> {
        let sizes = analysis.sizes.iter().map(|row| size_report(catalog, row)).collect();
        let profiles = build_profiles(g, analysis, options)?;
        let trends = options.trends.then(|| build_trends(catalog, analysis)).transpose()?;
        let timings = options.timings.then(|| {
            analysis
                .timings
                .iter()
                .map(|t| TimingEntry { stage: t.stage.to_string(), seconds: t.seconds })
                .collect()
        });
        Ok(CountReport {
            schema: 1,
            input: input.to_string(),
            n: g.vertex_count() as u64,
            m: g.edge_count() as u64,
            self_loops_dropped: stats.self_loops,
            duplicate_edges_dropped: stats.duplicates,
            max_pattern_size: analysis.sizes.last().map_or(3, |row| row.size),
            mode: match analysis.mode {
                Mode::Full => "full".to_string(),
                Mode::Degraded => "degraded".to_string(),
            },
            degraded_reason: analysis.degraded_reason.clone(),
            oracle_check: analysis.oracle_checked.then(|| "PASS".to_string()),
            sizes,
            profiles,
            trends,
            timings,
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// CSV with one row per pattern; empty cells encode null.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("size,id,name,kind,noninduced,induced\n");
        let blank = String::new();
        for size in &self.sizes {
            for row in &size.connected {
                out.push_str(&format!(
                    "{},{},{},connected,{},{}\n",
                    size.size,
                    row.id,
                    row.name,
                    row.noninduced.as_ref().unwrap_or(&blank),
                    row.induced.as_ref().unwrap_or(&blank),
                ));
            }
            for row in size.disconnected.iter().flatten() {
                out.push_str(&format!(
                    "{},{},{},disconnected,{},{}\n",
                    size.size,
                    row.id,
                    row.name,
                    row.noninduced.as_ref().unwrap_or(&blank),
                    row.induced.as_ref().unwrap_or(&blank),
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{analyze, PipelineOptions};

    fn k4_report(options: &ReportOptions) -> CountReport {
        let catalog = PatternCatalog::build();
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let analysis = analyze(&g, &catalog, &PipelineOptions::default()).unwrap();
        CountReport::build("k4", &g, &LoadStats::default(), &analysis, &catalog, options).unwrap()
    }

    #[test]
    fn json_reports_counts_as_strings() {
        let report = k4_report(&ReportOptions::default());
        let json = report.to_json_string();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["mode"], "full");
        assert_eq!(value["sizes"][1]["connected"][5]["name"], "four_clique");
        assert_eq!(value["sizes"][1]["connected"][5]["induced"], "1");
        assert_eq!(value["sizes"][2]["connected"][7]["noninduced"], "0");
        // Disconnected rows never carry non-induced counts.
        assert_eq!(value["sizes"][1]["disconnected"][0]["noninduced"], serde_json::Value::Null);
        assert!(json.ends_with('\n'));
    }

    #[test]
    fn csv_matches_json_values() {
        let report = k4_report(&ReportOptions::default());
        let csv = report.to_csv_string();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "size,id,name,kind,noninduced,induced");
        // 4 + 11 + 34 pattern rows.
        assert_eq!(csv.lines().count(), 1 + 4 + 11 + 34);
        assert!(csv.contains("4,4-6,four_clique,connected,1,1"));
        assert!(csv.contains("3,3-2,triangle,connected,4,4"));
    }

    #[test]
    fn profiles_and_trends_sections() {
        let options = ReportOptions {
            vertex_profiles: true,
            edge_profiles: true,
            trends: true,
            timings: true,
        };
        let report = k4_report(&options);
        let profiles = report.profiles.as_ref().unwrap();
        let vertex = profiles.vertex.as_ref().unwrap();
        assert_eq!(vertex.len(), 4);
        assert_eq!(vertex[0].degree, 3);
        assert_eq!(vertex[0].triangles, "3");
        let edge = profiles.edge.as_ref().unwrap();
        assert_eq!(edge.len(), 6);
        assert_eq!(edge[0].four_cliques, "1");
        let trends = report.trends.as_ref().unwrap();
        // K4 has no 4-cycles left after conversion: 1 - 0/3 = 1.
        let c4 = trends.edge_likelihood.iter().find(|t| t.id == "4-4").unwrap();
        assert_eq!(c4.value, Some(1.0));
        assert_eq!(trends.four_cycle_diamond_closure, Some(2.0));
        assert!(report.timings.as_ref().unwrap().iter().any(|t| t.stage == "orient"));
    }

    #[test]
    fn byte_identical_reports() {
        let a = k4_report(&ReportOptions::default()).to_json_string();
        let b = k4_report(&ReportOptions::default()).to_json_string();
        assert_eq!(a, b);
    }
}
