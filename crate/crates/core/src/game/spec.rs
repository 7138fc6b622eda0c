//! Rule sets for the generalized pursuit game.
//!
//! A [`VariantSpec`] fixes the full rule set of one game: per-cop speed,
//! reach and activity, the robber's speed, activity and attacking flag, the
//! capture mode, and directedness. The classic game is the all-defaults
//! instance. Specs parse from a small TOML config (see the README for the
//! schema).

use crate::error::GameError;
use serde::Deserialize;

pub const MAX_COPS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activity {
    /// Must move to a different vertex every turn.
    Active,
    /// At most one lazy cop moves per cop turn.
    Lazy,
    /// May move or stay.
    Flexible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RobberActivity {
    Active,
    Flexible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaptureMode {
    /// A cop captures by ending a cop move within its reach of the robber
    /// (on the robber's vertex in the classic game).
    OccupyOrReach,
    /// The cops capture by occupying every neighbor of the robber's vertex;
    /// agents may share vertices, but the robber may not end its turn on a
    /// cop.
    Surround,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CopSpec {
    pub speed: usize,
    pub reach: usize,
    pub activity: Activity,
}

impl Default for CopSpec {
    fn default() -> Self {
        CopSpec { speed: 1, reach: 0, activity: Activity::Flexible }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RobberSpec {
    pub speed: usize,
    pub activity: RobberActivity,
    pub attacking: bool,
}

impl Default for RobberSpec {
    fn default() -> Self {
        RobberSpec { speed: 1, activity: RobberActivity::Flexible, attacking: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantSpec {
    pub cops: Vec<CopSpec>,
    pub robber: RobberSpec,
    pub capture: CaptureMode,
    pub directed: bool,
}

impl VariantSpec {
    /// Classic rules: k identical flexible speed-1 cops, flexible speed-1
    /// robber, capture by occupancy.
    pub fn classic(k: usize) -> VariantSpec {
        VariantSpec {
            cops: vec![CopSpec::default(); k],
            robber: RobberSpec::default(),
            capture: CaptureMode::OccupyOrReach,
            directed: false,
        }
    }

    pub fn lazy(k: usize) -> VariantSpec {
        let mut s = VariantSpec::classic(k);
        for c in &mut s.cops {
            c.activity = Activity::Lazy;
        }
        s
    }

    pub fn attacking(k: usize) -> VariantSpec {
        let mut s = VariantSpec::classic(k);
        s.robber.attacking = true;
        s
    }

    /// Every cop and the robber must move each turn.
    pub fn fully_active(k: usize) -> VariantSpec {
        let mut s = VariantSpec::classic(k);
        for c in &mut s.cops {
            c.activity = Activity::Active;
        }
        s.robber.activity = RobberActivity::Active;
        s
    }

    pub fn surround(k: usize) -> VariantSpec {
        let mut s = VariantSpec::classic(k);
        s.capture = CaptureMode::Surround;
        s
    }

    pub fn fast_robber(k: usize, robber_speed: usize) -> VariantSpec {
        let mut s = VariantSpec::classic(k);
        s.robber.speed = robber_speed;
        s
    }

    pub fn directed_classic(k: usize) -> VariantSpec {
        let mut s = VariantSpec::classic(k);
        s.directed = true;
        s
    }

    pub fn k(&self) -> usize {
        self.cops.len()
    }

    /// The same rule set with the cop roster resized to `k` copies of the
    /// first cop's capabilities.
    pub fn with_k(&self, k: usize) -> VariantSpec {
        let template = self.cops.first().copied().unwrap_or_default();
        VariantSpec { cops: vec![template; k], ..self.clone() }
    }

    /// All cops share one capability record, which allows the solver to fold
    /// symmetric placements.
    pub fn uniform_cops(&self) -> bool {
        self.cops.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_classic(&self) -> bool {
        *self == VariantSpec::classic(self.k())
    }

    pub fn all_lazy(&self) -> bool {
        !self.cops.is_empty() && self.cops.iter().all(|c| c.activity == Activity::Lazy)
    }

    pub fn max_reach(&self) -> usize {
        self.cops.iter().map(|c| c.reach).max().unwrap_or(0)
    }

    /// Rejects rule combinations the game semantics do not define: activity
    /// forcing at speeds above 1, an attacking robber combined with reach or
    /// surround capture, and directed play for attack/surround rules.
    pub fn validate(&self) -> Result<(), GameError> {
        if self.cops.is_empty() {
            return Err(GameError::InvalidSpec("at least one cop is required".into()));
        }
        if self.cops.len() > MAX_COPS {
            return Err(GameError::TooManyCops(self.cops.len(), MAX_COPS));
        }
        for (i, c) in self.cops.iter().enumerate() {
            if c.speed == 0 {
                return Err(GameError::InvalidSpec(format!("cop {i} has speed 0")));
            }
            if c.activity == Activity::Active && c.speed != 1 {
                return Err(GameError::InvalidSpec(format!(
                    "cop {i} is active with speed {}; forced activity is only defined at speed 1",
                    c.speed
                )));
            }
        }
        if self.robber.speed == 0 {
            return Err(GameError::InvalidSpec("robber has speed 0".into()));
        }
        if self.robber.activity == RobberActivity::Active && self.robber.speed != 1 {
            return Err(GameError::InvalidSpec(
                "an active robber is only defined at speed 1".into(),
            ));
        }
        if self.robber.attacking {
            if self.max_reach() > 0 {
                return Err(GameError::InvalidSpec(
                    "an attacking robber cannot be combined with cop reach".into(),
                ));
            }
            if self.capture == CaptureMode::Surround {
                return Err(GameError::InvalidSpec(
                    "an attacking robber cannot be combined with surround capture".into(),
                ));
            }
            if self.directed {
                return Err(GameError::InvalidSpec(
                    "the attacking game is defined on undirected graphs".into(),
                ));
            }
        }
        if self.capture == CaptureMode::Surround {
            if self.max_reach() > 0 {
                return Err(GameError::InvalidSpec(
                    "surround capture cannot be combined with cop reach".into(),
                ));
            }
            if self.directed {
                return Err(GameError::InvalidSpec(
                    "surround capture is defined on undirected graphs".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    game: RawGame,
    #[serde(default)]
    cops: RawCop,
    #[serde(default)]
    cop: Vec<RawCop>,
    #[serde(default)]
    robber: RawRobber,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawGame {
    capture: Option<String>,
    directed: Option<bool>,
}

#[derive(Deserialize, Default, Clone)]
#[serde(deny_unknown_fields)]
struct RawCop {
    speed: Option<usize>,
    reach: Option<usize>,
    activity: Option<String>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawRobber {
    speed: Option<usize>,
    activity: Option<String>,
    attacking: Option<bool>,
}

fn parse_activity(s: &str) -> Result<Activity, GameError> {
    match s {
        "active" => Ok(Activity::Active),
        "lazy" => Ok(Activity::Lazy),
        "flexible" => Ok(Activity::Flexible),
        other => Err(GameError::InvalidSpec(format!("unknown activity `{other}`"))),
    }
}

/// Parses a rule-set config. The `[cops]` table is a template applied to all
/// `k` cops; explicit `[[cop]]` entries override the roster entirely (their
/// count must then match `k` when `k` is given).
pub fn parse_spec(text: &str, k: Option<usize>) -> Result<VariantSpec, GameError> {
    let raw: RawConfig =
        toml::from_str(text).map_err(|e| GameError::InvalidSpec(e.to_string()))?;
    let template_of = |rc: &RawCop| -> Result<CopSpec, GameError> {
        Ok(CopSpec {
            speed: rc.speed.unwrap_or(1),
            reach: rc.reach.unwrap_or(0),
            activity: rc.activity.as_deref().map(parse_activity).transpose()?.unwrap_or(Activity::Flexible),
        })
    };
    let cops: Vec<CopSpec> = if raw.cop.is_empty() {
        let k = k.ok_or_else(|| {
            GameError::InvalidSpec("cop count missing: pass --k or list [[cop]] entries".into())
        })?;
        vec![template_of(&raw.cops)?; k]
    } else {
        if let Some(k) = k {
            if k != raw.cop.len() {
                return Err(GameError::InvalidSpec(format!(
                    "--k {} conflicts with {} [[cop]] entries",
                    k,
                    raw.cop.len()
                )));
            }
        }
        raw.cop.iter().map(template_of).collect::<Result<_, _>>()?
    };
    let robber = RobberSpec {
        speed: raw.robber.speed.unwrap_or(1),
        activity: match raw.robber.activity.as_deref() {
            None | Some("flexible") => RobberActivity::Flexible,
            Some("active") => RobberActivity::Active,
            Some(other) => {
                return Err(GameError::InvalidSpec(format!(
                    "unknown robber activity `{other}`"
                )))
            }
        },
        attacking: raw.robber.attacking.unwrap_or(false),
    };
    let capture = match raw.game.capture.as_deref() {
        None | Some("occupy") => CaptureMode::OccupyOrReach,
        Some("surround") => CaptureMode::Surround,
        Some(other) => {
            return Err(GameError::InvalidSpec(format!("unknown capture mode `{other}`")))
        }
    };
    let spec = VariantSpec {
        cops,
        robber,
        capture,
        directed: raw.game.directed.unwrap_or(false),
    };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_validate() {
        for k in 1..=3 {
            VariantSpec::classic(k).validate().unwrap();
            VariantSpec::lazy(k).validate().unwrap();
            VariantSpec::attacking(k).validate().unwrap();
            VariantSpec::fully_active(k).validate().unwrap();
            VariantSpec::surround(k).validate().unwrap();
            VariantSpec::fast_robber(k, 2).validate().unwrap();
            VariantSpec::directed_classic(k).validate().unwrap();
        }
    }

    #[test]
    fn invalid_combinations() {
        let mut s = VariantSpec::fully_active(2);
        s.cops[0].speed = 2;
        assert!(s.validate().is_err());

        let mut s = VariantSpec::attacking(2);
        s.cops[1].reach = 1;
        assert!(s.validate().is_err());

        let mut s = VariantSpec::attacking(2);
        s.capture = CaptureMode::Surround;
        assert!(s.validate().is_err());

        let mut s = VariantSpec::fast_robber(1, 2);
        s.robber.activity = RobberActivity::Active;
        assert!(s.validate().is_err());

        let mut s = VariantSpec::surround(2);
        s.directed = true;
        assert!(s.validate().is_err());

        assert!(VariantSpec::classic(0).validate().is_err());
        assert!(VariantSpec::classic(9).validate().is_err());
    }

    #[test]
    fn parse_template_config() {
        let text = "\n[game]\ncapture = \"occupy\"\n\n[cops]\nspeed = 1\nactivity = \"lazy\"\n\n[robber]\nspeed = 2\n";
        let spec = parse_spec(text, Some(3)).unwrap();
        assert_eq!(spec.k(), 3);
        assert!(spec.all_lazy());
        assert_eq!(spec.robber.speed, 2);
        assert!(!spec.directed);
    }

    #[test]
    fn parse_explicit_roster() {
        let text = "[[cop]]\nspeed = 2\n\n[[cop]]\nspeed = 1\nreach = 1\n";
        let spec = parse_spec(text, None).unwrap();
        assert_eq!(spec.k(), 2);
        assert_eq!(spec.cops[0].speed, 2);
        assert_eq!(spec.cops[1].reach, 1);
        assert!(!spec.uniform_cops());
        assert!(parse_spec(text, Some(3)).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_spec("[robber]\nactivity = \"sleepy\"\n", Some(1)).is_err());
        assert!(parse_spec("[game]\ncapture = \"tag\"\n", Some(1)).is_err());
        assert!(parse_spec("[cops]\nspeed = 1\n", None).is_err());
        assert!(parse_spec("nonsense = true\n", Some(1)).is_err());
    }

    #[test]
    fn empty_config_is_classic() {
        let spec = parse_spec("", Some(2)).unwrap();
        assert!(spec.is_classic());
    }
}
