//! Script execution: ring and ideal bindings, module resolution, dispatch.

use std::collections::HashMap;
use std::io::Write;

use ordlen::{Engine, Monomial, MonomialIdeal, Ordinal, Subquotient};
use thiserror::Error;

use crate::commands::{CommandRegistry, Output};
use crate::syntax::{self, CommandCall, IdealExpr, ModuleRef, ParseError, Script, Stmt};

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// Undefined names, bad inclusions, impossible requests.
    #[error("{0}")]
    Semantic(String),
    /// Caps on variables or search depth.
    #[error("{0}")]
    Resource(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse(_) => 1,
            RunError::Semantic(_) | RunError::Io(_) => 2,
            RunError::Resource(_) => 3,
        }
    }

    fn at_line(self, line: usize) -> Self {
        match self {
            RunError::Semantic(m) => RunError::Semantic(format!("line {line}: {m}")),
            RunError::Resource(m) => RunError::Resource(format!("line {line}: {m}")),
            other => other,
        }
    }
}

impl From<ordlen::Error> for RunError {
    fn from(e: ordlen::Error) -> Self {
        match e {
            ordlen::Error::CapExceeded { .. } | ordlen::Error::TooManyVariables { .. } => {
                RunError::Resource(e.to_string())
            }
            _ => RunError::Semantic(e.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub json: bool,
    pub ascii: bool,
    pub max_vars: usize,
    pub backend: String,
    pub cap: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            json: false,
            ascii: false,
            max_vars: ordlen::monomial::DEFAULT_MAX_VARS,
            backend: "restriction".into(),
            cap: ordlen::invariants::DEFAULT_E_OPEN_CAP,
        }
    }
}

impl Options {
    pub fn engine(&self) -> Result<Engine, RunError> {
        Ok(Engine::with_backend(&self.backend)?
            .e_open_cap(self.cap)
            .max_vars(self.max_vars))
    }
}

/// Interpreter state: the current ring and the ideals bound in it.
pub struct Session {
    engine: Engine,
    ascii: bool,
    names: Vec<String>,
    has_ring: bool,
    ideals: HashMap<String, MonomialIdeal>,
}

impl Session {
    pub fn new(engine: Engine, ascii: bool) -> Self {
        Session {
            engine,
            ascii,
            names: Vec::new(),
            has_ring: false,
            ideals: HashMap::new(),
        }
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ord(&self, o: &Ordinal) -> String {
        o.render(self.ascii)
    }

    pub fn set_ring(&mut self, vars: &[String]) -> Result<(), RunError> {
        self.engine.check_vars(vars.len())?;
        for (k, v) in vars.iter().enumerate() {
            if vars[..k].contains(v) {
                return Err(RunError::Semantic(format!("variable `{v}` declared twice")));
            }
        }
        self.names = vars.to_vec();
        self.has_ring = true;
        self.ideals.clear();
        Ok(())
    }

    fn ring(&self) -> Result<usize, RunError> {
        if self.has_ring {
            Ok(self.names.len())
        } else {
            Err(RunError::Semantic("no ring declared".into()))
        }
    }

    pub fn bind(&mut self, name: &str, ideal: &IdealExpr) -> Result<(), RunError> {
        let n = self.ring()?;
        let value = match ideal {
            IdealExpr::Zero => MonomialIdeal::zero(n),
            IdealExpr::Gens(gens) => {
                let mut monos = Vec::with_capacity(gens.len());
                for g in gens {
                    let mut exps = vec![0u32; n];
                    for (v, e) in g {
                        let k =
                            self.names.iter().position(|x| x == v).ok_or_else(|| {
                                RunError::Semantic(format!("unknown variable `{v}`"))
                            })?;
                        exps[k] = exps[k].checked_add(*e).ok_or_else(|| {
                            RunError::Semantic(format!("exponent of `{v}` overflows"))
                        })?;
                    }
                    monos.push(Monomial::new(exps));
                }
                MonomialIdeal::new(n, monos)
            }
        };
        self.ideals.insert(name.to_string(), value);
        Ok(())
    }

    pub fn ideal(&self, name: &str) -> Result<&MonomialIdeal, RunError> {
        self.ring()?;
        self.ideals
            .get(name)
            .ok_or_else(|| RunError::Semantic(format!("undefined ideal `{name}`")))
    }

    pub fn module(&self, r: &ModuleRef) -> Result<Subquotient, RunError> {
        match r {
            ModuleRef::Cyclic(i) => Ok(Subquotient::cyclic(self.ideal(i)?.clone())),
            ModuleRef::Sub { upper, lower } => {
                let (j, i) = (self.ideal(upper)?, self.ideal(lower)?);
                Subquotient::new(i.clone(), j.clone()).map_err(|_| {
                    RunError::Semantic(format!("`{upper}` does not contain `{lower}`"))
                })
            }
        }
    }

    /// A submodule argument names a single ideal `K`, standing for `K/I`.
    pub fn submodule_ideal(&self, r: &ModuleRef) -> Result<&MonomialIdeal, RunError> {
        match r {
            ModuleRef::Cyclic(k) => self.ideal(k),
            ModuleRef::Sub { .. } => Err(RunError::Semantic(format!(
                "expected an ideal name, found `{r}`"
            ))),
        }
    }

    pub fn call(&self, registry: &CommandRegistry, call: &CommandCall) -> Result<Output, RunError> {
        let cmd = registry
            .get(&call.name)
            .ok_or_else(|| RunError::Semantic(format!("unknown command `{}`", call.name)))?;
        cmd.execute(self, &call.args)
    }
}

/// Runs every statement, writing one line (or block) per command as it
/// completes. Stops at the first failing statement.
pub fn execute(
    script: &Script,
    session: &mut Session,
    registry: &CommandRegistry,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), RunError> {
    for stmt in &script.stmts {
        match stmt {
            Stmt::Ring(vars) => session.set_ring(vars)?,
            Stmt::Bind { name, ideal, line } => {
                session.bind(name, ideal).map_err(|e| e.at_line(*line))?
            }
            Stmt::Command(call) => {
                let output = session
                    .call(registry, call)
                    .map_err(|e| e.at_line(call.line))?;
                if json {
                    writeln!(out, "{}", output.json)?;
                } else {
                    writeln!(out, "{}", output.text)?;
                }
                out.flush()?;
            }
        }
    }
    Ok(())
}

/// Parses and runs `source` with the builtin commands.
pub fn run_source(source: &str, opts: &Options, out: &mut dyn Write) -> Result<(), RunError> {
    let registry = CommandRegistry::builtin();
    let script = syntax::parse_with(source, &registry)?;
    let mut session = Session::new(opts.engine()?, opts.ascii);
    execute(&script, &mut session, &registry, opts.json, out)
}

/// Like [`run_source`] but collects the output; on failure the partial
/// output is returned alongside the error.
pub fn run_to_string(source: &str, opts: &Options) -> (String, Option<RunError>) {
    let mut buf = Vec::new();
    let err = run_source(source, opts, &mut buf).err();
    (String::from_utf8(buf).expect("output is utf-8"), err)
}
