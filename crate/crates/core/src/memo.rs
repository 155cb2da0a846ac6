//! Process-wide memo tables. Values are computed outside the lock and
//! inserted whole, so concurrent callers may duplicate work but never see a
//! partial entry.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

pub struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub const fn new() -> Self {
        Memo { map: OnceLock::new() }
    }

    fn map(&self) -> &RwLock<HashMap<K, Arc<V>>> {
        self.map.get_or_init(Default::default)
    }

    pub fn get_or(&self, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map().read().unwrap().get(key) {
            return v.clone();
        }
        let v = Arc::new(f());
        self.map()
            .write()
            .unwrap()
            .entry(key.clone())
            .or_insert(v)
            .clone()
    }
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new()
    }
}
