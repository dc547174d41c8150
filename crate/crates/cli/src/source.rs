//! Resolving a command-line source into an algebra.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use hopf_kernel::{presets, Field, FinHopfAlgebra, Functional2, LaurentHopf, Scalar};

use crate::document::{AlgebraDocument, FiniteSource};

pub const DEFAULT_WINDOW: i64 = 5;

/// Parameters shared by every command.
#[derive(Clone, Debug)]
pub struct Settings {
    pub xi: Scalar,
    pub window: i64,
    pub field: Option<Field>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { xi: Scalar::from_int(1), window: DEFAULT_WINDOW, field: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    Group(usize),
    Sweedler4,
    Laurent,
}

impl Preset {
    /// `group:C<n>`, `sweedler4` or `laurent`, optionally prefixed by `preset:`.
    pub fn lookup(name: &str) -> Option<Preset> {
        let name = name.strip_prefix("preset:").unwrap_or(name);
        match name {
            "sweedler4" => Some(Preset::Sweedler4),
            "laurent" => Some(Preset::Laurent),
            _ => {
                let n = name.strip_prefix("group:C")?.parse::<usize>().ok()?;
                (n >= 1).then_some(Preset::Group(n))
            }
        }
    }
}

pub enum Loaded {
    Finite(FiniteSource),
    Laurent { alg: LaurentHopf, window: i64 },
}

pub fn load(source: &str, settings: &Settings) -> Result<Loaded> {
    if let Some(p) = Preset::lookup(source) {
        return preset(&p, settings);
    }
    if source.starts_with("preset:") {
        bail!("{source}: unknown preset (expected group:C<n>, sweedler4 or laurent)");
    }
    let text = std::fs::read_to_string(Path::new(source)).with_context(|| format!("{source}: cannot read"))?;
    let doc = AlgebraDocument::from_json(&text).map_err(|e| anyhow!("{source}: {e}"))?;
    doc.parse(settings.field).map_err(|e| anyhow!("{source}: {e}"))
        .map(Loaded::Finite)
}

fn preset(p: &Preset, settings: &Settings) -> Result<Loaded> {
    let field = settings.field.unwrap_or(Field::Rationals);
    let over = |alg: FinHopfAlgebra| alg.over_field(field).map_err(|e| anyhow!("--field: {e}"));
    let src = match p {
        Preset::Laurent => {
            if settings.window < 2 {
                bail!("--window: must be at least 2, got {}", settings.window);
            }
            return Ok(Loaded::Laurent { alg: LaurentHopf::over_field(field), window: settings.window });
        }
        Preset::Group(n) => {
            let alg = over(presets::group_algebra(*n))?;
            let mut characters = Vec::new();
            if n % 2 == 0 {
                let sgn = presets::sign_character(*n);
                characters.push(("sgn".to_string(), hopf_kernel::Functional(sgn.0.iter().map(|c| field.embed(c)).collect())));
            }
            let grouplikes = if *n > 2 { vec![("g".to_string(), alg.element("g").expect("generator"))] } else { Vec::new() };
            let eps = alg.counit_functional();
            FiniteSource {
                field,
                r: Some(presets::trivial_r(&alg)),
                sigma: Some(Functional2::product(&eps, &eps)),
                constants: alg.constants().clone(),
                characters,
                grouplikes,
            }
        }
        Preset::Sweedler4 => {
            if field.try_embed(&settings.xi).is_none() {
                bail!("--xi: {} is not defined over {field}", settings.xi);
            }
            let alg = over(presets::sweedler4())?;
            FiniteSource {
                field,
                r: Some(presets::sweedler_r(&alg, &settings.xi)),
                sigma: None,
                constants: alg.constants().clone(),
                characters: Vec::new(),
                grouplikes: Vec::new(),
            }
        }
    };
    Ok(Loaded::Finite(src))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_names() {
        assert_eq!(Preset::lookup("preset:sweedler4"), Some(Preset::Sweedler4));
        assert_eq!(Preset::lookup("group:C4"), Some(Preset::Group(4)));
        assert_eq!(Preset::lookup("preset:group:C2"), Some(Preset::Group(2)));
        assert_eq!(Preset::lookup("group:C0"), None);
        assert_eq!(Preset::lookup("laurent"), Some(Preset::Laurent));
        assert_eq!(Preset::lookup("./laurent.json"), None);
    }

    #[test]
    fn xi_must_embed() {
        let s = Settings { xi: Scalar::ratio(1, 7), field: Some(Field::prime(7).unwrap()), ..Settings::default() };
        let err = load("sweedler4", &s).err().unwrap().to_string();
        assert!(err.starts_with("--xi: 1/7"), "{err}");
    }
}
