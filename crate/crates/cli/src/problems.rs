//! Resolve configured problems into runnable objectives.

use std::path::Path;

use anyhow::{bail, Context, Result};

use dcso::bench::{self, BenchmarkId, CecTransform, Family};
use dcso::model::ObjectiveSpec;
use dcso::qap;

use crate::config::ProblemConfig;

pub struct Problem {
    pub name: String,
    pub objective: ObjectiveSpec,
    pub is_qap: bool,
}

/// Load every configured problem up front so bad names or missing files
/// fail before any run starts.
pub fn resolve(problems: &[ProblemConfig]) -> Result<Vec<Problem>> {
    problems.iter().map(resolve_one).collect()
}

fn resolve_one(p: &ProblemConfig) -> Result<Problem> {
    if let Some(name) = &p.benchmark {
        let id = BenchmarkId::parse(name).with_context(|| format!("problem {name:?}"))?;
        let objective = match (&p.shift, &p.rotation) {
            (None, None) => bench::objective(id),
            _ => {
                if id.family != Family::Cec2019 {
                    bail!("{name}: shift/rotation data only applies to CEC benchmarks");
                }
                let dim = bench::metadata(id).dimension;
                let transform = CecTransform {
                    shift: p
                        .shift
                        .as_deref()
                        .map(|f| read_vector(f, dim))
                        .transpose()?,
                    rotation: p
                        .rotation
                        .as_deref()
                        .map(|f| read_matrix(f, dim))
                        .transpose()?,
                };
                bench::cec_objective(id.index, transform)?
            }
        };
        return Ok(Problem {
            name: id.label(),
            objective,
            is_qap: false,
        });
    }

    let path = p.qaplib.as_ref().expect("validated: benchmark or qaplib");
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("qap")
        .to_string();
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading QAPLIB file {}", path.display()))?;
    let instance = qap::parse_qaplib(&stem, &text)
        .with_context(|| format!("parsing QAPLIB file {}", path.display()))?;
    Ok(Problem {
        name: stem,
        objective: qap::qap_objective(&instance),
        is_qap: true,
    })
}

fn read_vector(path: &Path, dim: usize) -> Result<Vec<f64>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let values: Vec<f64> = text
        .split_whitespace()
        .map(|t| {
            t.parse()
                .with_context(|| format!("bad number {t:?} in {}", path.display()))
        })
        .collect::<Result<_>>()?;
    if values.len() != dim {
        bail!(
            "{}: expected {dim} values, found {}",
            path.display(),
            values.len()
        );
    }
    Ok(values)
}

fn read_matrix(path: &Path, dim: usize) -> Result<Vec<Vec<f64>>> {
    let flat = read_vector(path, dim * dim)
        .with_context(|| format!("rotation matrix must hold {dim}x{dim} entries"))?;
    Ok(flat.chunks_exact(dim).map(|r| r.to_vec()).collect())
}

/// Rows for `list-problems`.
pub fn catalog() -> Vec<String> {
    bench::all_ids()
        .into_iter()
        .map(|id| {
            let m = bench::metadata(id);
            format!(
                "{:6} dim={:<3} range=[{}, {}] reference_optimum={}",
                id.label(),
                m.dimension,
                m.lower,
                m.upper,
                m.f_min
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;

    fn bench_problem(name: &str) -> ProblemConfig {
        ProblemConfig {
            benchmark: Some(name.to_string()),
            qaplib: None,
            shift: None,
            rotation: None,
        }
    }

    #[test]
    fn resolves_benchmarks_by_name() {
        let list = resolve(&[bench_problem("f16"), bench_problem("CEC04")]).unwrap();
        assert_eq!(list[0].name, "F16");
        assert_eq!(list[0].objective.dimension(), 2);
        assert_eq!(list[1].name, "CEC04");
        assert!(!list[1].is_qap);
    }

    #[test]
    fn unknown_names_fail_before_running() {
        assert!(resolve(&[bench_problem("F99")]).is_err());
    }

    #[test]
    fn missing_qaplib_file_fails_at_load() {
        let p = ProblemConfig {
            benchmark: None,
            qaplib: Some(PathBuf::from("/nonexistent/foo.dat")),
            shift: None,
            rotation: None,
        };
        assert!(resolve(std::slice::from_ref(&p)).is_err());
    }

    #[test]
    fn loads_the_bundled_instances() {
        let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/qaplib/ste36b.dat");
        let p = ProblemConfig {
            benchmark: None,
            qaplib: Some(root),
            shift: None,
            rotation: None,
        };
        let list = resolve(std::slice::from_ref(&p)).unwrap();
        assert_eq!(list[0].name, "ste36b");
        assert_eq!(list[0].objective.dimension(), 36);
        assert!(list[0].is_qap);
    }

    #[test]
    fn catalog_covers_both_families() {
        let rows = catalog();
        assert_eq!(rows.len(), 33);
        assert!(rows[0].starts_with("F1 "));
        assert!(rows[32].starts_with("CEC10"));
    }
}
