//! Run configuration and input loading.

use std::fs;
use std::path::{Path, PathBuf};

use bicov_core::group::{abelian_irreps, from_permutations, parse_cayley, parse_permutation_file};
use bicov_core::{catalog, ConjugacyClass, GroupTable, Irrep};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Catalog(String),
    Cayley(PathBuf),
    Perms(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Classify,
    Bimodules,
    Verify,
    Ybe { class: String, irrep: String },
    Calculus { class: String, phi: Option<String> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Bimodules => "bimodules",
            Command::Verify => "verify",
            Command::Ybe { .. } => "ybe",
            Command::Calculus { .. } => "calculus",
        }
    }
}

/// Everything a run needs; exactly one group source by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub group: GroupSource,
    pub irrep_dir: Option<PathBuf>,
    pub tol: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub command: Command,
}

impl RunConfig {
    pub fn validate(&self) -> CliResult<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::Input(format!(
                "tolerance must be positive and finite, found {}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// Where the irreps came from, as reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrrepOrigin {
    Catalog,
    Abelian,
    Directory(PathBuf),
    Unavailable,
}

impl IrrepOrigin {
    pub fn describe(&self) -> String {
        match self {
            IrrepOrigin::Catalog => "catalog".into(),
            IrrepOrigin::Abelian => "characters".into(),
            IrrepOrigin::Directory(p) => p.display().to_string(),
            IrrepOrigin::Unavailable => "none".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub name: String,
    pub source: String,
    pub table: GroupTable,
    pub irreps: Option<Vec<Irrep>>,
    pub origin: IrrepOrigin,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

pub fn load_group(config: &RunConfig) -> CliResult<LoadedGroup> {
    let (name, source, table, catalog_irreps) = match &config.group {
        GroupSource::Catalog(name) => {
            let g = catalog(name).map_err(|e| CliError::Input(e.to_string()))?;
            (g.name, "catalog".to_owned(), g.table, Some(g.irreps))
        }
        GroupSource::Cayley(path) => {
            let table = parse_cayley(&read(path)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            (stem(path), "cayley".to_owned(), table, None)
        }
        GroupSource::Perms(path) => {
            let table = parse_permutation_file(&read(path)?)
                .and_then(|gens| from_permutations(&gens))
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            (stem(path), "perms".to_owned(), table, None)
        }
    };
    let (irreps, origin) = if let Some(dir) = &config.irrep_dir {
        (
            Some(load_irrep_dir(&table, dir, config.tol)?),
            IrrepOrigin::Directory(dir.clone()),
        )
    } else if let Some(list) = catalog_irreps {
        (Some(list), IrrepOrigin::Catalog)
    } else if table.is_abelian() {
        let list = abelian_irreps(&table).map_err(|e| CliError::Input(e.to_string()))?;
        (Some(list), IrrepOrigin::Abelian)
    } else {
        (None, IrrepOrigin::Unavailable)
    };
    Ok(LoadedGroup {
        name,
        source,
        table,
        irreps,
        origin,
    })
}

/// Every `*.json` file in `dir`, in file-name order; the file stem is the
/// default label. The trivial representation is prepended when absent.
pub fn load_irrep_dir(table: &GroupTable, dir: &Path, tol: f64) -> CliResult<Vec<Irrep>> {
    let entries =
        fs::read_dir(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Input(format!(
            "{}: no *.json irrep files",
            dir.display()
        )));
    }
    let mut irreps = Vec::with_capacity(paths.len() + 1);
    for path in &paths {
        let irrep = Irrep::from_json(table, &read(path)?, &stem(path), tol)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        irreps.push(irrep);
    }
    if !irreps.iter().any(Irrep::is_trivial) {
        irreps.insert(0, Irrep::trivial(table));
    }
    Ok(irreps)
}

impl LoadedGroup {
    pub fn require_irreps(&self) -> CliResult<&[Irrep]> {
        self.irreps.as_deref().ok_or_else(|| {
            CliError::MissingData(format!(
                "group `{}` is non-abelian and not in the catalog; supply its irreducible representations \
                 with --irrep-dir DIR (one JSON file per irrep: {{\"dim\": d, \"matrices\": [...]}})",
                self.name
            ))
        })
    }

    /// A class by index into the canonical class list, or by member name.
    pub fn select_class(&self, key: &str) -> CliResult<ConjugacyClass> {
        let classes = self.table.conjugacy_classes();
        if let Ok(k) = key.parse::<usize>() {
            if k < classes.len() {
                return Ok(classes[k].clone());
            }
        }
        if let Some(g) = self.table.element_by_name(key) {
            if let Some(c) = classes.iter().find(|c| c.contains(g)) {
                return Ok(c.clone());
            }
        }
        Err(CliError::Input(format!(
            "unknown class `{key}`: expected an index in 0..{} or an element name",
            classes.len()
        )))
    }

    /// An irrep by label, by index, or `trivial`.
    pub fn select_irrep(&self, key: &str) -> CliResult<Irrep> {
        if key == "trivial" {
            if let Some(list) = &self.irreps {
                if let Some(t) = list
                    .iter()
                    .find(|r| r.label() == "trivial")
                    .or_else(|| list.iter().find(|r| r.is_trivial()))
                {
                    return Ok(t.clone());
                }
            }
            return Ok(Irrep::trivial(&self.table));
        }
        let list = self.require_irreps()?;
        if let Some(r) = list.iter().find(|r| r.label() == key) {
            return Ok(r.clone());
        }
        if let Some(r) = key.parse::<usize>().ok().and_then(|k| list.get(k)) {
            return Ok(r.clone());
        }
        let labels: Vec<&str> = list.iter().map(|r| r.label()).collect();
        Err(CliError::Input(format!(
            "unknown irrep `{key}`: expected one of {labels:?} or an index"
        )))
    }

    /// An element by name, or by index when no name matches.
    pub fn select_element(&self, key: &str) -> CliResult<usize> {
        self.table
            .element_by_name(key)
            .or_else(|| {
                key.parse::<usize>()
                    .ok()
                    .filter(|&k| k < self.table.order())
            })
            .ok_or_else(|| CliError::Input(format!("unknown group element `{key}`")))
    }
}
