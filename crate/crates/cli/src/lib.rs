//! Library behind the `drg` binary: input-source resolution, the report
//! builder for each subcommand, output rendering, and the exit-code policy.
//!
//! Exit codes: 0 = success; 1 = input or usage errors; 2 = the requested
//! analysis does not apply to the input (reports are still emitted);
//! 3 = a verified conclusion was contradicted by direct computation.

pub mod render;
pub mod scan;

use std::fmt;
use std::path::PathBuf;

use drg_core::classifier::{
    appendix_inequality_verify, babai_case_analysis, hamming_pipeline, johnson_hypotheses,
    theta1_equals_b1_minus_1, ClassifierConfig, Label,
};
use drg_core::dual::{build_dual, dual_spectrum_check, root_graph_m2};
use drg_core::error::{Error, Result};
use drg_core::geometry::{
    delsarte_bound, detect_clique_geometry, metsch_criterion, verify_geometric_identities,
    GeometryInfo,
};
use drg_core::graph::{
    find_induced_quadrangle, generate, parse_graph, write_graph, Family, GeneratorSpec, Graph,
};
use drg_core::motion::{exact_motion, DEFAULT_MAX_GROUP};
use drg_core::params::{basic_inequalities, check_distance_regular, IntersectionArray};
use drg_core::spectral::{closed_form_spectrum, eigen_solve, feasibility_check};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_APPLICABLE: i32 = 2;
pub const EXIT_CONTRADICTION: i32 = 3;

/// Substring that marks a computation contradicting a verified conclusion;
/// its presence anywhere in the rendered output forces exit code 3.
pub const CONTRADICTION_MARKER: &str = "theorem-contradiction";

/// Largest family member materialized as an explicit graph when a command
/// can also work at array level.
pub const MATERIALIZE_CAP: u64 = 20_000;
/// Largest graph `generate` will write out.
pub const GENERATE_CAP: u64 = 2_000_000;
/// Largest graph handed to graph-level structure detection (cliques, duals,
/// automorphisms).
pub const STRUCTURE_CAP: u64 = 20_000;
/// Largest graph passed to the classifier for automorphism cross-checks.
pub const CLASSIFY_CROSS_CHECK_CAP: usize = 512;

/// Output format for report-producing subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Single JSON document (NDJSON for scan).
    Json,
    /// Flat numeric table; only analyze, spectrum, and motion support it.
    Csv,
    /// `path = value` lines.
    Text,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Format::Json => write!(f, "json"),
            Format::Csv => write!(f, "csv"),
            Format::Text => write!(f, "text"),
        }
    }
}

/// Everything a subcommand produces: the rendered body, an optional sidecar
/// file (suffix to append to the output path, content), and the exit code
/// before the contradiction sweep.
pub struct CommandOutput {
    pub body: String,
    pub sidecar: Option<(String, String)>,
    pub base_exit: i32,
}

impl CommandOutput {
    fn new(body: String, base_exit: i32) -> Self {
        CommandOutput {
            body,
            sidecar: None,
            base_exit,
        }
    }
}

/// Final exit code: any contradiction marker in the output dominates.
pub fn final_exit(output: &CommandOutput) -> i32 {
    let contradicted = output.body.contains(CONTRADICTION_MARKER)
        || output
            .sidecar
            .as_ref()
            .is_some_and(|(_, content)| content.contains(CONTRADICTION_MARKER));
    if contradicted {
        EXIT_CONTRADICTION
    } else {
        output.base_exit
    }
}

// ---------------------------------------------------------------------------
// Input sources
// ---------------------------------------------------------------------------

/// The mutually exclusive input flags shared by the analysis subcommands.
#[derive(Debug, Default, Clone)]
pub struct SourceSpec {
    pub input: Option<PathBuf>,
    pub family: Option<String>,
    pub s: Option<u64>,
    pub d: Option<u64>,
    pub doob_t: Option<u64>,
    pub doob_l: Option<u64>,
    pub array: Option<String>,
}

/// A resolved input: at least one of `graph`/`array` is set.
pub struct Resolved {
    pub graph: Option<Graph>,
    pub array: Option<IntersectionArray>,
    /// Generator parameters when the source was a named family.
    pub spec: Option<GeneratorSpec>,
    /// Human-readable description of the source for reports.
    pub source: String,
}

impl Resolved {
    /// The intersection array: as resolved, or extracted from the graph.
    pub fn array(&mut self) -> Result<IntersectionArray> {
        if let Some(arr) = &self.array {
            return Ok(arr.clone());
        }
        let g = self.graph.as_ref().ok_or_else(|| {
            Error::Internal("resolved input carries neither graph nor array".into())
        })?;
        let arr = check_distance_regular(g)?;
        self.array = Some(arr.clone());
        Ok(arr)
    }
}

impl SourceSpec {
    /// Validates that exactly one source is given and that family
    /// parameters only ride along with `--family`.
    fn mode(&self) -> Result<SourceMode> {
        let given = [
            self.input.is_some(),
            self.family.is_some(),
            self.array.is_some(),
        ]
        .iter()
        .filter(|&&x| x)
        .count();
        if given != 1 {
            return Err(Error::InvalidParameters(
                "exactly one input source is required: --input FILE, --family NAME, or --array JSON"
                    .into(),
            ));
        }
        if self.family.is_none()
            && (self.s.is_some()
                || self.d.is_some()
                || self.doob_t.is_some()
                || self.doob_l.is_some())
        {
            return Err(Error::InvalidParameters(
                "--s/--d/--doob-t/--doob-l only apply together with --family".into(),
            ));
        }
        Ok(if self.input.is_some() {
            SourceMode::File
        } else if self.family.is_some() {
            SourceMode::Family
        } else {
            SourceMode::Array
        })
    }

    fn generator_spec(&self) -> Result<GeneratorSpec> {
        let name = self
            .family
            .as_deref()
            .expect("generator_spec called without --family");
        family_spec(name, self.s, self.d, self.doob_t, self.doob_l)
    }

    /// Resolves to a graph and/or array. `graph_cap` bounds how large a
    /// family member is materialized as an explicit graph; `require_graph`
    /// turns a too-large or array-only source into an error.
    pub fn resolve(&self, graph_cap: u64, require_graph: bool) -> Result<Resolved> {
        match self.mode()? {
            SourceMode::File => {
                let path = self.input.as_ref().unwrap();
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::InvalidParameters(format!("cannot read {}: {e}", path.display()))
                })?;
                let graph = parse_graph(&text)?;
                let source = match graph.label() {
                    Some(label) => format!("{} ({label})", path.display()),
                    None => path.display().to_string(),
                };
                Ok(Resolved {
                    graph: Some(graph),
                    array: None,
                    spec: None,
                    source,
                })
            }
            SourceMode::Family => {
                let spec = self.generator_spec()?;
                let n = expected_vertex_count(&spec)?;
                let array = closed_form_array(&spec);
                let graph = if n <= graph_cap {
                    Some(generate(&spec)?)
                } else if require_graph {
                    return Err(Error::InvalidParameters(format!(
                        "{} has {n} vertices; explicit-graph analysis is capped at {graph_cap}",
                        describe_spec(&spec)
                    )));
                } else if array.is_none() {
                    return Err(Error::InvalidParameters(format!(
                        "{} has {n} vertices (cap {graph_cap}) and no closed-form array",
                        describe_spec(&spec)
                    )));
                } else {
                    None
                };
                Ok(Resolved {
                    source: describe_spec(&spec),
                    graph,
                    array,
                    spec: Some(spec),
                })
            }
            SourceMode::Array => {
                if require_graph {
                    return Err(Error::InvalidParameters(
                        "this command needs an explicit graph; pass --input or --family".into(),
                    ));
                }
                let text = self.array.as_ref().unwrap();
                let arr: IntersectionArray = serde_json::from_str(text).map_err(|e| {
                    Error::InvalidParameters(format!("invalid --array JSON: {e}"))
                })?;
                Ok(Resolved {
                    graph: None,
                    source: format!("array {arr}"),
                    array: Some(arr),
                    spec: None,
                })
            }
        }
    }
}

enum SourceMode {
    File,
    Family,
    Array,
}

fn need(flag: &str, value: Option<u64>, family: &str) -> Result<u64> {
    value.ok_or_else(|| {
        Error::InvalidParameters(format!("--family {family} requires {flag}"))
    })
}

/// Maps a family name and its parameters to a generator spec.
pub fn family_spec(
    name: &str,
    s: Option<u64>,
    d: Option<u64>,
    doob_t: Option<u64>,
    doob_l: Option<u64>,
) -> Result<GeneratorSpec> {
    let lower = name.to_ascii_lowercase();
    let fam = match lower.as_str() {
        "johnson" => Family::Johnson,
        "hamming" => Family::Hamming,
        "doob" => Family::Doob,
        "shrikhande" => Family::Shrikhande,
        "cocktail-party" => Family::CocktailParty,
        "complete-bipartite-line" => Family::CompleteBipartiteLine,
        "complete" => Family::Complete,
        "cycle" => Family::Cycle,
        other => {
            return Err(Error::InvalidParameters(format!(
                "unknown family '{other}'; expected one of johnson, hamming, doob, \
                 shrikhande, cocktail-party, complete-bipartite-line, complete, cycle"
            )))
        }
    };
    if fam != Family::Doob && (doob_t.is_some() || doob_l.is_some()) {
        return Err(Error::InvalidParameters(
            "--doob-t/--doob-l only apply to --family doob".into(),
        ));
    }
    let spec = match fam {
        Family::Johnson | Family::Hamming | Family::CompleteBipartiteLine => GeneratorSpec::new(
            fam,
            need("--s", s, &lower)? as usize,
            need("--d", d, &lower)? as usize,
        ),
        Family::Doob => {
            let t = need("--doob-t", doob_t, &lower)?;
            let l = need("--doob-l", doob_l, &lower)?;
            if s.is_some() || d.is_some() {
                return Err(Error::InvalidParameters(
                    "--family doob takes --doob-t/--doob-l, not --s/--d".into(),
                ));
            }
            GeneratorSpec::doob(t as usize, l as usize)
        }
        Family::Shrikhande => {
            if s.is_some() || d.is_some() {
                return Err(Error::InvalidParameters(
                    "--family shrikhande takes no parameters".into(),
                ));
            }
            GeneratorSpec::new(fam, 0, 0)
        }
        Family::CocktailParty | Family::Complete | Family::Cycle => {
            if d.is_some() {
                return Err(Error::InvalidParameters(format!(
                    "--family {lower} takes only --s"
                )));
            }
            GeneratorSpec::new(fam, need("--s", s, &lower)? as usize, 0)
        }
    };
    Ok(spec)
}

/// Human-readable member name, matching the labels the generators emit.
pub fn describe_spec(spec: &GeneratorSpec) -> String {
    match spec.family {
        Family::Johnson => format!("J({},{})", spec.s, spec.d),
        Family::Hamming => format!("H({},{})", spec.d, spec.s),
        Family::Doob => format!("Doob({},{})", spec.doob_t, spec.doob_l),
        Family::Shrikhande => "Shrikhande".into(),
        Family::CocktailParty => format!("K_{{{}x2}}", spec.s),
        Family::CompleteBipartiteLine => format!("L(K_{{{},{}}})", spec.s, spec.d),
        Family::Complete => format!("K_{}", spec.s),
        Family::Cycle => format!("C_{}", spec.s),
    }
}

/// Vertex count of a family member, computed without building the graph.
pub fn expected_vertex_count(spec: &GeneratorSpec) -> Result<u64> {
    let too_big = || Error::InvalidParameters(format!("{} is too large", describe_spec(spec)));
    let n: u128 = match spec.family {
        Family::Johnson => binomial_u128(spec.s as u128, spec.d as u128).ok_or_else(too_big)?,
        Family::Hamming => (spec.s as u128)
            .checked_pow(u32::try_from(spec.d).map_err(|_| too_big())?)
            .ok_or_else(too_big)?,
        Family::Doob => 4u128
            .checked_pow(
                u32::try_from(spec.doob_t + 2 * spec.doob_l).map_err(|_| too_big())?,
            )
            .ok_or_else(too_big)?,
        Family::Shrikhande => 16,
        Family::CocktailParty => 2 * spec.s as u128,
        Family::CompleteBipartiteLine => (spec.s as u128) * (spec.d as u128),
        Family::Complete | Family::Cycle => spec.s as u128,
    };
    u64::try_from(n).map_err(|_| too_big())
}

fn binomial_u128(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1; // exact: acc holds C(n, i+1) * (i+1)! / (i+1)! progressively
    }
    Some(acc)
}

/// Closed-form intersection array for the families that have one here.
pub fn closed_form_array(spec: &GeneratorSpec) -> Option<IntersectionArray> {
    match spec.family {
        Family::Johnson => IntersectionArray::johnson(spec.s as u64, spec.d as u64).ok(),
        Family::Hamming => IntersectionArray::hamming(spec.d as u64, spec.s as u64).ok(),
        Family::Doob => {
            let d = (spec.doob_t + 2 * spec.doob_l) as u64;
            (d >= 1).then(|| IntersectionArray::hamming(d, 4).ok()).flatten()
        }
        _ => None,
    }
}

/// Maximum group-enumeration size: the `DRG_MAX_GROUP` environment variable
/// wins over the flag; the built-in default applies when neither is set.
pub fn resolve_max_group(flag: Option<u64>) -> Result<u64> {
    match std::env::var("DRG_MAX_GROUP") {
        Ok(text) => text.trim().parse::<u64>().map_err(|_| {
            Error::InvalidParameters(format!(
                "DRG_MAX_GROUP must be a positive integer, got '{text}'"
            ))
        }),
        Err(_) => Ok(flag.unwrap_or(DEFAULT_MAX_GROUP)),
    }
}

/// Classifier configuration for diameter `d` with optional overrides. When
/// `--m-d` changes the eigenvalue cutoff without an explicit `--epsilon`,
/// the derived default epsilon is recomputed against the new cutoff.
pub fn resolve_config(
    d: usize,
    epsilon: Option<f64>,
    eta: Option<f64>,
    m_d: Option<u64>,
) -> Result<ClassifierConfig> {
    let mut config = ClassifierConfig::for_diameter(d)?;
    if let Some(m) = m_d {
        if m < 2 {
            return Err(Error::InvalidParameters(format!(
                "--m-d must be at least 2, got {m}"
            )));
        }
        config.m_d = m;
        let cap = 1.0 / (6.0 * (m as f64).powi(4) * d as f64);
        config.epsilon = 0.5 * cap.min(config.eps_d);
    }
    if let Some(e) = epsilon {
        config.epsilon = e;
    }
    if let Some(h) = eta {
        config.eta_d = h;
    }
    config.validate()?;
    Ok(config)
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

fn envelope(command: &str, report: Value) -> Value {
    json!({ "command": command, "report": report })
}

/// Renders a nested report: JSON or text; CSV is rejected.
fn finish_nested(command: &str, report: Value, format: Format) -> Result<String> {
    let doc = envelope(command, report);
    match format {
        Format::Json => Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&doc).expect("report serializes")
        )),
        Format::Text => Ok(render::to_text(&doc)),
        Format::Csv => Err(Error::InvalidParameters(format!(
            "{command} reports are nested; csv is only available for analyze, spectrum, and motion"
        ))),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report type serializes")
}

fn array_summary(arr: &IntersectionArray) -> Value {
    json!({
        "d": arr.diameter(),
        "b": arr.b_sequence(),
        "c": arr.c_sequence(),
        "a": (0..=arr.diameter()).map(|i| arr.a(i)).collect::<Vec<_>>(),
        "k": arr.degree(),
        "layer_sizes": arr.layer_sizes().ok(),
        "n": arr.vertex_count().ok(),
        "display": arr.to_string(),
    })
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

/// `generate`: build a family member and emit its edge-list text.
pub fn cmd_generate(source: &SourceSpec) -> Result<CommandOutput> {
    if source.family.is_none() {
        return Err(Error::InvalidParameters(
            "generate needs --family (plus its parameters)".into(),
        ));
    }
    if source.input.is_some() || source.array.is_some() {
        return Err(Error::InvalidParameters(
            "generate takes only --family sources".into(),
        ));
    }
    let spec = source.generator_spec()?;
    let n = expected_vertex_count(&spec)?;
    if n > GENERATE_CAP {
        return Err(Error::InvalidParameters(format!(
            "{} has {n} vertices; generate is capped at {GENERATE_CAP}",
            describe_spec(&spec)
        )));
    }
    let graph = generate(&spec)?;
    Ok(CommandOutput::new(write_graph(&graph), EXIT_OK))
}

/// `analyze`: distance-regularity check, intersection array, layer sizes,
/// and the elementary parameter inequalities.
pub fn cmd_analyze(source: &SourceSpec, format: Format) -> Result<CommandOutput> {
    let mut resolved = source.resolve(MATERIALIZE_CAP, false)?;
    let graph_view = match &resolved.graph {
        Some(g) => json!({ "n": g.n(), "edge_count": g.edge_count() }),
        None => Value::Null,
    };

    if let Some(g) = &resolved.graph {
        match check_distance_regular(g) {
            Ok(arr) => {
                let has_quad = find_induced_quadrangle(g).is_some();
                let inequalities = basic_inequalities(&arr, has_quad);
                let report = json!({
                    "source": resolved.source,
                    "graph": graph_view,
                    "distance_regular": true,
                    "array": array_summary(&arr),
                    "has_induced_quadrangle": has_quad,
                    "inequalities": inequalities,
                });
                return render_analyze(report, &arr, format, EXIT_OK);
            }
            Err(
                e @ (Error::NotConnected
                | Error::NotRegular { .. }
                | Error::NotDistanceRegular { .. }),
            ) => {
                let report = json!({
                    "source": resolved.source,
                    "graph": graph_view,
                    "distance_regular": false,
                    "reason": e.to_string(),
                });
                return match format {
                    Format::Csv => {
                        let g = resolved.graph.as_ref().unwrap();
                        let rows = vec![
                            vec!["distance_regular".into(), "0".into()],
                            vec!["n".into(), g.n().to_string()],
                            vec!["edge_count".into(), g.edge_count().to_string()],
                        ];
                        Ok(CommandOutput::new(
                            render::csv_table(&["quantity", "value"], &rows),
                            EXIT_NOT_APPLICABLE,
                        ))
                    }
                    _ => Ok(CommandOutput {
                        body: finish_nested("analyze", report, format)?,
                        sidecar: None,
                        base_exit: EXIT_NOT_APPLICABLE,
                    }),
                };
            }
            Err(other) => return Err(other),
        }
    }

    // Array-level analysis (no explicit graph).
    let arr = resolved.array()?;
    let report = json!({
        "source": resolved.source,
        "graph": graph_view,
        "distance_regular": Value::Null,
        "array": array_summary(&arr),
        "inequalities": basic_inequalities(&arr, false),
    });
    render_analyze(report, &arr, format, EXIT_OK)
}

fn render_analyze(
    report: Value,
    arr: &IntersectionArray,
    format: Format,
    exit: i32,
) -> Result<CommandOutput> {
    match format {
        Format::Csv => {
            let d = arr.diameter();
            let layers = arr.layer_sizes().ok();
            let rows: Vec<Vec<String>> = (0..=d)
                .map(|i| {
                    vec![
                        i.to_string(),
                        arr.b(i).to_string(),
                        arr.c(i).to_string(),
                        arr.a(i).to_string(),
                        layers
                            .map(|ls| ls[i].to_string())
                            .unwrap_or_default(),
                    ]
                })
                .collect();
            Ok(CommandOutput::new(
                render::csv_table(&["i", "b_i", "c_i", "a_i", "layer_size"], &rows),
                exit,
            ))
        }
        _ => Ok(CommandOutput {
            body: finish_nested("analyze", report, format)?,
            sidecar: None,
            base_exit: exit,
        }),
    }
}

/// `spectrum`: eigenvalues, multiplicities, standard sequences, and the
/// realizability checks; the closed form rides along for family input.
pub fn cmd_spectrum(source: &SourceSpec, format: Format) -> Result<CommandOutput> {
    let mut resolved = source.resolve(MATERIALIZE_CAP, false)?;
    let arr = resolved.array()?;
    let profile = eigen_solve(&arr)?;
    let closed_form = resolved
        .spec
        .as_ref()
        .and_then(|spec| closed_form_spectrum(spec).ok());

    match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = profile
                .eigenvalues
                .iter()
                .zip(&profile.multiplicities)
                .zip(&profile.multiplicity_residuals)
                .zip(&profile.integral_flags)
                .enumerate()
                .map(|(j, (((ev, mult), res), integral))| {
                    vec![
                        j.to_string(),
                        ev.to_string(),
                        mult.to_string(),
                        res.to_string(),
                        (*integral as u8).to_string(),
                    ]
                })
                .collect();
            Ok(CommandOutput::new(
                render::csv_table(
                    &["j", "eigenvalue", "multiplicity", "residual", "integral"],
                    &rows,
                ),
                EXIT_OK,
            ))
        }
        _ => {
            let report = json!({
                "source": resolved.source,
                "array": array_summary(&arr),
                "profile": profile,
                "closed_form": closed_form.as_ref().map(to_value),
                "feasibility": feasibility_check(&arr),
            });
            Ok(CommandOutput {
                body: finish_nested("spectrum", report, format)?,
                sidecar: None,
                base_exit: EXIT_OK,
            })
        }
    }
}

/// `geometry`: clique-geometry detection on explicit graphs, or the
/// array-level geometric parameters plus Metsch's criterion.
pub fn cmd_geometry(source: &SourceSpec, format: Format) -> Result<CommandOutput> {
    let mut resolved = source.resolve(STRUCTURE_CAP, false)?;
    let arr = resolved.array()?;
    let profile = eigen_solve(&arr)?;
    let theta_min = profile.theta_min();
    let delsarte = delsarte_bound(arr.degree(), theta_min)?;

    // Array-level geometry: the smallest eigenvalue must be a negative
    // integer -m and the parameters must fit a clique geometry with that m.
    let m_candidate = (*profile.integral_flags.last().unwrap() && theta_min <= -1.0)
        .then(|| (-theta_min).round() as u64);
    let array_geometry =
        m_candidate.and_then(|m| GeometryInfo::from_array(&arr, m).ok());
    let metsch = m_candidate.map(|m| metsch_criterion(&arr, m));

    let (detection, identities, is_geometric) = match &resolved.graph {
        Some(g) => {
            let det = detect_clique_geometry(g, &arr, &profile)?;
            let ids = verify_geometric_identities(&det, &arr);
            let geometric = det.is_geometric;
            (Some(det), Some(ids), geometric)
        }
        None => (None, None, array_geometry.is_some()),
    };

    let report = json!({
        "source": resolved.source,
        "array": array_summary(&arr),
        "theta_min": theta_min,
        "delsarte_clique_bound": delsarte,
        "is_geometric": is_geometric,
        "array_geometry": array_geometry.as_ref().map(to_value),
        "metsch": metsch.as_ref().map(to_value),
        "detection": detection.as_ref().map(to_value),
        "identities": identities.as_ref().map(to_value),
    });
    let exit = if is_geometric { EXIT_OK } else { EXIT_NOT_APPLICABLE };
    Ok(CommandOutput {
        body: finish_nested("geometry", report, format)?,
        sidecar: None,
        base_exit: exit,
    })
}

/// `dual`: build the clique-geometry dual, check its spectrum containment,
/// and for m = 2 verify the line-graph round trip. With `-o` the dual's
/// edge list goes to the output file and the report to a `.cliques.json`
/// sidecar.
pub fn cmd_dual(source: &SourceSpec, format: Format, to_file: bool) -> Result<CommandOutput> {
    let mut resolved = source.resolve(STRUCTURE_CAP, true)?;
    let arr = resolved.array()?;
    let profile = eigen_solve(&arr)?;
    let g = resolved.graph.as_ref().expect("resolve(require_graph)");
    let detection = detect_clique_geometry(g, &arr, &profile)?;

    if !detection.is_geometric {
        let report = json!({
            "source": resolved.source,
            "is_geometric": false,
            "detection": to_value(&detection),
            "note": "the dual graph is only defined over a clique geometry",
        });
        return Ok(CommandOutput {
            body: finish_nested("dual", report, format)?,
            sidecar: None,
            base_exit: EXIT_NOT_APPLICABLE,
        });
    }

    let dual = build_dual(g, &detection)?;
    let containment = dual_spectrum_check(g, &dual, &profile);
    let round_trip = if detection.m == Some(2) {
        match root_graph_m2(g, &detection) {
            Ok(_) => Some(json!({ "holds": true, "note": "line graph of the dual is isomorphic to the original" })),
            Err(e) => Some(json!({ "holds": false, "note": e.to_string() })),
        }
    } else {
        None
    };

    let report = json!({
        "source": resolved.source,
        "is_geometric": true,
        "m": detection.m,
        "dual": {
            "n": dual.graph.n(),
            "edge_count": dual.graph.edge_count(),
            "k_tilde": dual.k_tilde,
            "lambda_tilde": dual.lambda_tilde,
            "diameter": dual.diameter,
        },
        "spectrum_containment": to_value(&containment),
        "line_graph_round_trip": round_trip,
        "clique_of_vertex": dual.clique_of_vertex,
    });

    if to_file {
        // Edge list to the main output, full report to the sidecar.
        let sidecar_body = format!(
            "{}\n",
            serde_json::to_string_pretty(&envelope("dual", report)).expect("report serializes")
        );
        let mut dual_graph = dual.graph.clone();
        dual_graph.set_label(format!("dual of {}", resolved.source));
        Ok(CommandOutput {
            body: write_graph(&dual_graph),
            sidecar: Some((".cliques.json".into(), sidecar_body)),
            base_exit: EXIT_OK,
        })
    } else {
        Ok(CommandOutput {
            body: finish_nested("dual", report, format)?,
            sidecar: None,
            base_exit: EXIT_OK,
        })
    }
}

/// `motion`: exact minimum automorphism support via group enumeration,
/// alongside every computable lower bound.
pub fn cmd_motion(source: &SourceSpec, max_group: u64, format: Format) -> Result<CommandOutput> {
    let resolved = source.resolve(STRUCTURE_CAP, true)?;
    let g = resolved.graph.as_ref().expect("resolve(require_graph)");
    let report = exact_motion(g, max_group);

    match format {
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = vec![
                vec![
                    "exact_motion".into(),
                    report.exact_motion.map(|x| x.to_string()).unwrap_or_default(),
                ],
                vec![
                    "group_order".into(),
                    report.group_order.map(|x| x.to_string()).unwrap_or_default(),
                ],
                vec!["no_mover".into(), (report.no_mover as u8).to_string()],
                vec![
                    "min_support_found".into(),
                    report
                        .min_support_found
                        .map(|x| x.to_string())
                        .unwrap_or_default(),
                ],
            ];
            for bound in &report.bounds {
                rows.push(vec![bound.name.clone(), bound.value.to_string()]);
            }
            if let Some(t) = report.thickness_bound {
                rows.push(vec!["thickness_bound".into(), t.to_string()]);
            }
            Ok(CommandOutput::new(
                render::csv_table(&["quantity", "value"], &rows),
                EXIT_OK,
            ))
        }
        _ => {
            let body = json!({
                "source": resolved.source,
                "n": g.n(),
                "max_group": max_group,
                "motion": to_value(&report),
            });
            Ok(CommandOutput {
                body: finish_nested("motion", body, format)?,
                sidecar: None,
                base_exit: EXIT_OK,
            })
        }
    }
}

/// `classify`: run the full case analysis plus the Johnson and Hamming
/// recognition pipelines and report which closed-form family, if any, the
/// array matches.
pub fn cmd_classify(
    source: &SourceSpec,
    epsilon: Option<f64>,
    eta: Option<f64>,
    m_d: Option<u64>,
    format: Format,
) -> Result<CommandOutput> {
    let mut resolved = source.resolve(CLASSIFY_CROSS_CHECK_CAP as u64, false)?;
    let arr = resolved.array()?;
    let config = resolve_config(arr.diameter(), epsilon, eta, m_d)?;
    let profile = eigen_solve(&arr)?;

    let theta_min = profile.theta_min();
    let geometry = (*profile.integral_flags.last().unwrap() && theta_min <= -1.0)
        .then(|| GeometryInfo::from_array(&arr, (-theta_min).round() as u64).ok())
        .flatten();
    let cross_check_graph = resolved
        .graph
        .as_ref()
        .filter(|g| g.n() <= CLASSIFY_CROSS_CHECK_CAP);

    let outcome = babai_case_analysis(
        &arr,
        &profile,
        geometry.as_ref(),
        cross_check_graph,
        &config,
    );
    let johnson = geometry
        .as_ref()
        .map(|geo| johnson_hypotheses(&arr, &profile, geo, &config));
    let hamming = geometry
        .as_ref()
        .map(|geo| hamming_pipeline(&arr, &profile, geo, &config));

    let report = json!({
        "source": resolved.source,
        "array": array_summary(&arr),
        "config": to_value(&config),
        "geometry": geometry.as_ref().map(to_value),
        "case_analysis": to_value(&outcome),
        "johnson": johnson.as_ref().map(to_value),
        "hamming": hamming.as_ref().map(to_value),
        "theta1_equals_b1_minus_1": theta1_equals_b1_minus_1(&profile, &arr),
        "family_note": family_note(&arr),
    });
    let exit = if matches!(outcome.label, Label::Inconclusive) {
        EXIT_NOT_APPLICABLE
    } else {
        EXIT_OK
    };
    Ok(CommandOutput {
        body: finish_nested("classify", report, format)?,
        sidecar: None,
        base_exit: exit,
    })
}

/// Names the closed-form family array this one coincides with, if any.
pub fn family_note(arr: &IntersectionArray) -> Option<String> {
    let d = arr.diameter() as u64;
    let k = arr.degree();
    if d == 0 || k % d != 0 {
        return None;
    }
    let quot = k / d;
    let s_j = quot + d;
    if let Ok(j) = IntersectionArray::johnson(s_j, d) {
        if j == *arr {
            return Some(format!("matches the closed-form array of J({s_j},{d})"));
        }
    }
    let s_h = quot + 1;
    if let Ok(h) = IntersectionArray::hamming(d, s_h) {
        if h == *arr {
            let mut note = format!("matches the closed-form array of H({d},{s_h})");
            if s_h == 4 && d >= 2 {
                note.push_str("; the Doob graphs of the same diameter share this array");
            }
            return Some(note);
        }
    }
    None
}

/// `scan`: enumerate and classify feasible arrays; NDJSON body.
pub fn cmd_scan(
    d: usize,
    k_max: u64,
    epsilon: Option<f64>,
    eta: Option<f64>,
    m_d: Option<u64>,
) -> Result<CommandOutput> {
    let config = resolve_config(d, epsilon, eta, m_d)?;
    let params = scan::ScanParams { d, k_max, config };
    let body = scan::scan(&params)?;
    Ok(CommandOutput::new(body, EXIT_OK))
}

/// `verify-appendix`: exhaustive exact check of the clique-intersection
/// inequality up to `m_max`.
pub fn cmd_verify_appendix(m_max: u64, format: Format) -> Result<CommandOutput> {
    let inequality = appendix_inequality_verify(m_max)?;
    let verdict = if inequality.holds {
        "holds".to_string()
    } else {
        format!("{CONTRADICTION_MARKER}: the clique-intersection inequality failed")
    };
    let report = json!({
        "m_max": m_max,
        "inequality": to_value(&inequality),
        "verdict": verdict,
    });
    Ok(CommandOutput {
        body: finish_nested("verify-appendix", report, format)?,
        sidecar: None,
        base_exit: EXIT_OK,
    })
}
