//! Script commands. Each command is a [`Command`] trait object registered by
//! name; the parser reads argument kinds from the registry, and the runner
//! dispatches through it.

use std::collections::BTreeMap;

use ordlen::{Cycle, Ordinal};
use serde_json::{json, Value};

use crate::run::{RunError, Session};
use crate::syntax::{Arg, ModuleRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgKind {
    Int,
    Module,
    Ordinal,
}

/// Result of one command in both output formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn signature(&self) -> &'static [ArgKind];
    fn summary(&self) -> &'static str;
    fn execute(&self, session: &Session, args: &[Arg]) -> Result<Output, RunError>;
}

pub struct CommandRegistry {
    commands: BTreeMap<&'static str, Box<dyn Command>>,
}

impl CommandRegistry {
    pub fn empty() -> Self {
        CommandRegistry {
            commands: BTreeMap::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(Len));
        reg.register(Box::new(CycleCmd));
        reg.register(Box::new(Ass));
        reg.register(Box::new(Invariants));
        reg.register(Box::new(Filtration));
        reg.register(Box::new(Open));
        reg.register(Box::new(IOpen));
        reg.register(Box::new(Closure));
        reg.register(Box::new(HomVanishes));
        reg.register(Box::new(SubmodLen));
        reg.register(Box::new(EOpen));
        reg
    }

    pub fn register(&mut self, cmd: Box<dyn Command>) {
        self.commands.insert(cmd.name(), cmd);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.get(name).map(|c| c.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Command> + '_ {
        self.commands.values().map(|c| c.as_ref())
    }
}

impl Default for CommandRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// `{"2": 1, "1": 1}` for ω^2 + ω.
pub fn ordinal_json(o: &Ordinal) -> Value {
    let map = o
        .terms()
        .map(|(e, c)| {
            let v = u64::try_from(c).map_or_else(|_| json!(c.to_string()), |c| json!(c));
            (e.to_string(), v)
        })
        .collect::<serde_json::Map<_, _>>();
    Value::Object(map)
}

pub fn cycle_json(c: &Cycle, names: &[String]) -> Value {
    Value::Array(
        c.terms()
            .map(|(p, a)| {
                let vars: Vec<&str> = p.vars().iter().map(|&v| names[v].as_str()).collect();
                json!({ "vars": vars, "mult": a })
            })
            .collect(),
    )
}

fn module(args: &[Arg], k: usize) -> &ModuleRef {
    match &args[k] {
        Arg::Ref(r) => r,
        other => unreachable!("parser guarantees a module argument, got {other:?}"),
    }
}

fn int(args: &[Arg], k: usize) -> i64 {
    match &args[k] {
        Arg::Int(n) => *n,
        other => unreachable!("parser guarantees an integer argument, got {other:?}"),
    }
}

fn ordinal(args: &[Arg], k: usize) -> &Ordinal {
    match &args[k] {
        Arg::Ordinal(o) => o,
        other => unreachable!("parser guarantees an ordinal argument, got {other:?}"),
    }
}

struct Len;

impl Command for Len {
    fn name(&self) -> &'static str {
        "len"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "ordinal length of a module"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let r = module(args, 0);
        let len = s.engine().length(&s.module(r)?);
        Ok(Output {
            text: format!("len {r} = {}", s.ord(&len)),
            json: json!({
                "cmd": "len",
                "module": r.to_string(),
                "length": ordinal_json(&len),
                "display": s.ord(&len),
            }),
        })
    }
}

struct CycleCmd;

impl Command for CycleCmd {
    fn name(&self) -> &'static str {
        "cycle"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "fundamental cycle"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let r = module(args, 0);
        let c = s.engine().fundamental_cycle(&s.module(r)?);
        let shown = c.render(s.names());
        Ok(Output {
            text: format!("cycle {r} = {shown}"),
            json: json!({
                "cmd": "cycle",
                "module": r.to_string(),
                "cycle": cycle_json(&c, s.names()),
                "display": shown,
            }),
        })
    }
}

struct Ass;

impl Command for Ass {
    fn name(&self) -> &'static str {
        "ass"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "associated primes"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let r = module(args, 0);
        let primes = s.engine().associated_primes(&s.module(r)?);
        let shown: Vec<String> = primes.iter().map(|p| p.render(s.names())).collect();
        let vars: Vec<Vec<&str>> = primes
            .iter()
            .map(|p| p.vars().iter().map(|&v| s.names()[v].as_str()).collect())
            .collect();
        let text = if shown.is_empty() {
            "none".to_string()
        } else {
            shown.join(", ")
        };
        Ok(Output {
            text: format!("ass {r} = {text}"),
            json: json!({
                "cmd": "ass",
                "module": r.to_string(),
                "primes": vars,
                "dims": primes.iter().map(|p| p.dim()).collect::<Vec<_>>(),
            }),
        })
    }
}

struct Invariants;

impl Command for Invariants {
    fn name(&self) -> &'static str {
        "invariants"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "order, valence, dimension, generic length, unmixedness"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let r = module(args, 0);
        let b = s.engine().basic_invariants(&s.module(r)?);
        let opt = |v: Option<u32>| v.map_or("undefined".to_string(), |d| d.to_string());
        Ok(Output {
            text: format!(
                "invariants {r}: order {}, dimension {}, valence {}, generic length {}, {}, {}",
                opt(b.order),
                opt(b.dimension),
                b.valence,
                b.generic_length,
                if b.is_unmixed { "unmixed" } else { "mixed" },
                if b.no_embedded_primes {
                    "no embedded primes"
                } else {
                    "embedded primes"
                },
            ),
            json: json!({
                "cmd": "invariants",
                "module": r.to_string(),
                "order": b.order,
                "dimension": b.dimension,
                "valence": b.valence,
                "generic_length": b.generic_length,
                "unmixed": b.is_unmixed,
                "no_embedded_primes": b.no_embedded_primes,
            }),
        })
    }
}

struct Filtration;

impl Command for Filtration {
    fn name(&self) -> &'static str {
        "filtration"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "dimension filtration D_i"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let r = module(args, 0);
        let m = s.module(r)?;
        let top = s.engine().length(&m).degree().map_or(-1, i64::from);
        let mut lines = vec![format!("filtration {r}:")];
        let mut steps = Vec::new();
        for i in -1..=top {
            let d = s.engine().dimension_filtration(&m, i);
            let len = s.engine().length(&d);
            let ideal = d.upper().render(s.names());
            lines.push(format!("  D_{i} = {ideal} (len = {})", s.ord(&len)));
            steps.push(json!({
                "i": i,
                "ideal": ideal,
                "length": ordinal_json(&len),
                "display": s.ord(&len),
            }));
        }
        Ok(Output {
            text: lines.join("\n"),
            json: json!({ "cmd": "filtration", "module": r.to_string(), "steps": steps }),
        })
    }
}

struct Open;

impl Command for Open {
    fn name(&self) -> &'static str {
        "open"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module, ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "whether K/I is open in the module"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let (r, k_name) = (module(args, 0), module(args, 1));
        let m = s.module(r)?;
        let k = s.submodule_ideal(k_name)?;
        let open = s.engine().is_open(&m, k).map_err(RunError::from)?;
        let len = s.engine().length(&m.submodule(k).map_err(RunError::from)?);
        let verdict = if open { "open" } else { "not open" };
        Ok(Output {
            text: format!(
                "{k_name_s} in {r}: {verdict} (len = {})",
                s.ord(&len),
                k_name_s = ideal_name(k_name)
            ),
            json: json!({
                "cmd": "open",
                "module": r.to_string(),
                "submodule": ideal_name(k_name),
                "open": open,
                "length": ordinal_json(&len),
                "display": s.ord(&len),
            }),
        })
    }
}

fn ideal_name(r: &ModuleRef) -> String {
    match r {
        ModuleRef::Cyclic(n) => n.clone(),
        other => other.to_string(),
    }
}

struct IOpen;

impl Command for IOpen {
    fn name(&self) -> &'static str {
        "iopen"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Int, ArgKind::Module, ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "whether K/I is an i-open"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let i = int(args, 0);
        let (r, k_name) = (module(args, 1), module(args, 2));
        let m = s.module(r)?;
        let k = s.submodule_ideal(k_name)?;
        let is = s.engine().is_i_open(&m, k, i).map_err(RunError::from)?;
        let len = s.engine().length(&m.submodule(k).map_err(RunError::from)?);
        let target = s.engine().length(&m).truncate_above(i);
        let verdict = if is {
            format!("{i}-open")
        } else {
            format!("not {i}-open")
        };
        Ok(Output {
            text: format!(
                "{} in {r}: {verdict} (len = {}, target = {})",
                ideal_name(k_name),
                s.ord(&len),
                s.ord(&target)
            ),
            json: json!({
                "cmd": "iopen",
                "i": i,
                "module": r.to_string(),
                "submodule": ideal_name(k_name),
                "iopen": is,
                "length": ordinal_json(&len),
                "target": ordinal_json(&target),
            }),
        })
    }
}

struct Closure;

impl Command for Closure {
    fn name(&self) -> &'static str {
        "closure"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module, ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "closure of K/I in the canonical topology"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let (r, k_name) = (module(args, 0), module(args, 1));
        let m = s.module(r)?;
        let k = s.submodule_ideal(k_name)?;
        let c = s.engine().closure(&m, k).map_err(RunError::from)?;
        let shown = c.render(s.names());
        Ok(Output {
            text: format!("closure of {} in {r} = {shown}", ideal_name(k_name)),
            json: json!({
                "cmd": "closure",
                "module": r.to_string(),
                "submodule": ideal_name(k_name),
                "closure": shown,
                "closed": c == *k,
            }),
        })
    }
}

struct HomVanishes;

impl Command for HomVanishes {
    fn name(&self) -> &'static str {
        "homvanishes"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module, ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "sufficient criterion dim M < ord N for Hom(M, N) = 0"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let (a, b) = (module(args, 0), module(args, 1));
        let (m, n) = (s.module(a)?, s.module(b)?);
        let vanishes = s.engine().hom_vanishes(&m, &n).map_err(RunError::from)?;
        let dim = s.engine().dimension(&m).map_err(RunError::from)?;
        let ord = s.engine().order(&n).map_err(RunError::from)?;
        let text = if vanishes {
            format!("Hom({a}, {b}) = 0 (dim {dim} < ord {ord})")
        } else {
            format!("Hom({a}, {b}): vanishing not implied (dim {dim} >= ord {ord})")
        };
        Ok(Output {
            text,
            json: json!({
                "cmd": "homvanishes",
                "source": a.to_string(),
                "target": b.to_string(),
                "vanishes": vanishes,
                "dim": dim,
                "ord": ord,
            }),
        })
    }
}

struct SubmodLen;

impl Command for SubmodLen {
    fn name(&self) -> &'static str {
        "submodlen"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module, ArgKind::Ordinal]
    }
    fn summary(&self) -> &'static str {
        "a monomial submodule of the given length"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let r = module(args, 0);
        let nu = ordinal(args, 1);
        let m = s.module(r)?;
        let k = s
            .engine()
            .construct_submodule_of_length(&m, nu)
            .map_err(RunError::from)?;
        let shown = k.render(s.names());
        Ok(Output {
            text: format!("submodule of {r} with len {}: {shown}", s.ord(nu)),
            json: json!({
                "cmd": "submodlen",
                "module": r.to_string(),
                "length": ordinal_json(nu),
                "display": s.ord(nu),
                "ideal": shown,
            }),
        })
    }
}

struct EOpen;

impl Command for EOpen {
    fn name(&self) -> &'static str {
        "eopen"
    }
    fn signature(&self) -> &'static [ArgKind] {
        &[ArgKind::Module]
    }
    fn summary(&self) -> &'static str {
        "least power of the order-e primes that is e-open"
    }
    fn execute(&self, s: &Session, args: &[Arg]) -> Result<Output, RunError> {
        let r = module(args, 0);
        let found = s
            .engine()
            .find_e_open_power(&s.module(r)?)
            .map_err(RunError::from)?;
        let shown = found.ideal.render(s.names());
        Ok(Output {
            text: format!(
                "eopen {r}: e = {}, n = {}, ideal = {shown}",
                found.order, found.exponent
            ),
            json: json!({
                "cmd": "eopen",
                "module": r.to_string(),
                "e": found.order,
                "n": found.exponent,
                "ideal": shown,
            }),
        })
    }
}
