use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use super::{check_same, is_isomorphic_indecomposable, Module};
use crate::bqa::Algebra;
use crate::error::Result;
use crate::homology::{injective, projective, simple};

/// A process-wide registry of indecomposable modules over one algebra, up to
/// isomorphism. Projectives, simples and injectives are registered first under
/// the names `P<i>`, `S<i>`, `I<i>`; later entries are named by dimension
/// vector in order of discovery.
pub struct Catalog {
    alg: Arc<Algebra>,
    inner: RwLock<Inner>,
}

#[derive(Default)]
struct Inner {
    modules: Vec<Module>,
    labels: Vec<String>,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
}

static CATALOGS: Mutex<Option<HashMap<u64, Arc<Catalog>>>> = Mutex::new(None);

impl Catalog {
    pub fn of(alg: &Arc<Algebra>) -> Arc<Catalog> {
        let mut guard = CATALOGS.lock().unwrap();
        if let Some(c) = guard.get_or_insert_with(HashMap::new).get(&alg.id()) {
            return c.clone();
        }
        let cat = Arc::new(Catalog { alg: alg.clone(), inner: RwLock::new(Inner::default()) });
        let n = alg.vertex_count();
        for (prefix, build) in [
            ("P", projective as fn(&Arc<Algebra>, usize) -> Result<Module>),
            ("S", simple),
            ("I", injective),
        ] {
            for v in 0..n {
                let m = build(alg, v).expect("structural module");
                cat.intern_named(&m, Some(format!("{prefix}{}", v + 1))).expect("indecomposable");
            }
        }
        guard.as_mut().unwrap().insert(alg.id(), cat.clone());
        cat
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.inner.read().unwrap().modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Id of the registered module isomorphic to `m` (which must be indecomposable).
    pub fn find(&self, m: &Module) -> Result<Option<usize>> {
        check_same(m, &Module::zero(&self.alg))?;
        let candidates: Vec<(usize, Module)> = {
            let g = self.inner.read().unwrap();
            match g.by_dims.get(m.dims()) {
                None => return Ok(None),
                Some(ids) => ids.iter().map(|&i| (i, g.modules[i].clone())).collect(),
            }
        };
        for (i, x) in candidates {
            if x == *m || is_isomorphic_indecomposable(&x, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Registers an indecomposable module, returning the id of its class.
    pub fn intern(&self, m: &Module) -> Result<usize> {
        self.intern_named(m, None)
    }

    fn intern_named(&self, m: &Module, name: Option<String>) -> Result<usize> {
        if let Some(i) = self.find(m)? {
            return Ok(i);
        }
        let mut g = self.inner.write().unwrap();
        if let Some(ids) = g.by_dims.get(m.dims()) {
            for &i in ids {
                if is_isomorphic_indecomposable(&g.modules[i], m)? {
                    return Ok(i);
                }
            }
        }
        let id = g.modules.len();
        let same = g.by_dims.get(m.dims()).map_or(0, Vec::len);
        let label = name.unwrap_or_else(|| {
            let digits: Vec<String> = m.dims().iter().map(|d| d.to_string()).collect();
            let sep = if m.dims().iter().any(|&d| d > 9) { "," } else { "" };
            let base = format!("M{}", digits.join(sep));
            if same == 0 {
                base
            } else {
                format!("{base}.{}", same + 1)
            }
        });
        g.modules.push(m.clone());
        g.labels.push(label);
        g.by_dims.entry(m.dims().to_vec()).or_default().push(id);
        Ok(id)
    }

    pub fn module(&self, id: usize) -> Module {
        self.inner.read().unwrap().modules[id].clone()
    }

    pub fn label(&self, id: usize) -> String {
        self.inner.read().unwrap().labels[id].clone()
    }
}
