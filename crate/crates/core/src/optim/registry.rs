use std::collections::BTreeMap;
use std::fmt;

use super::{Optimizer, RandomSearch};
use crate::error::{Error, Result};
use crate::mtsa::{Mtsa, MtsaParams};

/// Optimizer parameters as `name -> value` strings.
pub type ParamMap = BTreeMap<String, String>;

type Factory = Box<dyn Fn(&ParamMap) -> Result<Box<dyn Optimizer>> + Send + Sync>;

/// Named optimizer factories, in registration order.
pub struct Registry {
    entries: Vec<(String, Factory)>,
}

impl Registry {
    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    /// Registry with `mtsa` and `random_search`.
    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register("mtsa", |params| {
            Ok(Box::new(Mtsa::new(MtsaParams::from_map(params)?)?) as Box<dyn Optimizer>)
        })
        .expect("fresh registry");
        r.register("random_search", |params| {
            if let Some(key) = params.keys().next() {
                return Err(Error::InvalidParameter(format!(
                    "random_search has no parameter `{key}`"
                )));
            }
            Ok(Box::new(RandomSearch) as Box<dyn Optimizer>)
        })
        .expect("fresh registry");
        r
    }

    pub fn register<F>(&mut self, name: &str, factory: F) -> Result<()>
    where
        F: Fn(&ParamMap) -> Result<Box<dyn Optimizer>> + Send + Sync + 'static,
    {
        if self.contains(name) {
            return Err(Error::Config(format!(
                "optimizer `{name}` already registered"
            )));
        }
        self.entries.push((name.to_string(), Box::new(factory)));
        Ok(())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.iter().any(|(n, _)| n == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn create(&self, name: &str, params: &ParamMap) -> Result<Box<dyn Optimizer>> {
        let (_, factory) = self
            .entries
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| Error::UnknownOptimizer(name.to_string()))?;
        factory(params)
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

impl fmt::Debug for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Registry")
            .field("names", &self.names())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_registered() {
        let r = Registry::with_defaults();
        assert_eq!(r.names(), vec!["mtsa", "random_search"]);
        assert_eq!(r.create("mtsa", &ParamMap::new()).unwrap().name(), "mtsa");
        assert!(matches!(
            r.create("lshade", &ParamMap::new()),
            Err(Error::UnknownOptimizer(_))
        ));
    }

    #[test]
    fn third_party_registration() {
        let mut r = Registry::with_defaults();
        r.register("baseline2", |_| {
            Ok(Box::new(RandomSearch) as Box<dyn Optimizer>)
        })
        .unwrap();
        assert!(r.contains("baseline2"));
        assert!(r
            .register("mtsa", |_| Ok(Box::new(RandomSearch) as Box<dyn Optimizer>))
            .is_err());
    }

    #[test]
    fn unknown_parameters_rejected() {
        let r = Registry::with_defaults();
        let mut p = ParamMap::new();
        p.insert("nonsense".into(), "1".into());
        assert!(r.create("mtsa", &p).is_err());
        assert!(r.create("random_search", &p).is_err());
    }
}
