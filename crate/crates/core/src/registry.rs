//! Registry files: the algebra, its named modules, and the declared
//! X-subcategory members, parsed from JSON.

use std::sync::Arc;

use serde::Deserialize;

use crate::algebra::{AlgebraPresentation, FdModule};
use crate::approx::XSubcategory;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Mat, DEFAULT_P};

#[derive(Debug, Deserialize)]
pub struct RegistryFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub field: Option<FieldEntry>,
    pub algebra: AlgebraEntry,
    pub modules: Vec<ModuleEntry>,
    pub x: Vec<String>,
}

#[derive(Debug, Deserialize)]
pub struct FieldEntry {
    pub p: u64,
}

#[derive(Debug, Deserialize)]
pub struct AlgebraEntry {
    pub basis: Vec<String>,
    pub unit: Vec<i64>,
    pub mult: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Deserialize)]
pub struct ModuleEntry {
    pub name: String,
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

/// A validated collection of modules over one algebra, with a declared
/// set of basic X-objects.
#[derive(Clone, Debug)]
pub struct ObjectRegistry {
    pub name: String,
    pub algebra: Arc<AlgebraPresentation>,
    pub modules: Vec<Arc<FdModule>>,
    pub x_members: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

impl ObjectRegistry {
    pub fn from_json(text: &str, p_override: Option<u64>) -> Result<Self> {
        let file: RegistryFile = serde_json::from_str(text)?;
        Self::from_file(file, p_override)
    }

    pub fn from_file(file: RegistryFile, p_override: Option<u64>) -> Result<Self> {
        let p = p_override.or(file.field.map(|f| f.p)).unwrap_or(DEFAULT_P);
        let field = FieldSpec::new(p)?;
        let algebra = Arc::new(AlgebraPresentation::new(
            field,
            file.algebra.basis,
            file.algebra.mult,
            file.algebra.unit,
        )?);
        let mut modules = Vec::new();
        for entry in file.modules {
            if entry.action.len() != algebra.dim {
                return Err(Error::DimMismatch(format!(
                    "module `{}`: expected {} action matrices, found {}",
                    entry.name,
                    algebra.dim,
                    entry.action.len()
                )));
            }
            let action: Vec<Mat> = entry
                .action
                .iter()
                .map(|rows| Mat::from_rows(field, rows))
                .collect();
            for m in &action {
                if m.rows() != entry.dim || m.cols() != entry.dim {
                    return Err(Error::DimMismatch(format!(
                        "module `{}`: action matrices must be {0}x{0}",
                        entry.name
                    )));
                }
            }
            modules.push(Arc::new(FdModule::new(entry.name, algebra.clone(), action)?));
        }
        Ok(ObjectRegistry {
            name: file.name.unwrap_or_default(),
            algebra,
            modules,
            x_members: file.x,
        })
    }

    pub fn get(&self, name: &str) -> Result<Arc<FdModule>> {
        self.modules
            .iter()
            .find(|m| m.name == name)
            .cloned()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    /// The declared X, as the full additive subcategory generated by the
    /// listed basic objects.
    pub fn x_subcategory(&self) -> Result<XSubcategory> {
        let mut objects = Vec::new();
        for name in &self.x_members {
            objects.push(self.get(name)?);
        }
        Ok(XSubcategory::new(objects))
    }

    /// X restricted to an explicit list of names, for CLI overrides.
    pub fn x_subcategory_of(&self, names: &[String]) -> Result<XSubcategory> {
        let mut objects = Vec::new();
        for name in names {
            objects.push(self.get(name)?);
        }
        Ok(XSubcategory::new(objects))
    }

    /// All algebra and module axioms, plus X-membership resolution.
    pub fn validate(&self) -> ValidationReport {
        let mut problems = self.algebra.validate();
        for m in &self.modules {
            problems.extend(m.validate());
        }
        for name in &self.x_members {
            if !self.modules.iter().any(|m| &m.name == name) {
                problems.push(format!("x member `{name}` does not resolve to a registered module"));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for m in &self.modules {
            if !seen.insert(m.name.clone()) {
                problems.push(format!("duplicate module name `{}`", m.name));
            }
        }
        ValidationReport { problems }
    }
}
