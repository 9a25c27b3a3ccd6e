//! The built-in example corpus, compiled into the binary.

/// `(file stem, JSON text)` pairs per kind.
macro_rules! files {
    ($dir:literal: $($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/", $dir, "/", $name, ".json")))),*]
    };
}

pub const ALGEBRAS: &[(&str, &str)] = files!("algebras":
    "B4",
    "DM4",
    "K3",
    "L2",
    "L3",
    "L4",
    "L5",
    "M3",
    "WK3",
    "WK3c",
    "box5",
    "fepfail3",
    "modal-chain1",
    "modal-chain2",
    "modal-chain3",
    "modal-chain4",
    "modal-chain5",
);

pub const LOGICS: &[(&str, &str)] = files!("logics":
    "FEPFAIL",
    "ID",
    "KL",
    "LP",
    "LUK",
    "MODAL",
    "ONE",
    "ORDER",
    "PWK",
    "PWK-M",
);

pub const CLASSES: &[(&str, &str)] = files!("classes":
    "alpha12",
    "isp-k3",
    "isp-wk3",
    "pwk-quasi",
);

pub const CANDIDATES: &[(&str, &str)] = files!("candidates":
    "box-eq",
    "kl-global",
    "lp-global",
    "luk-global-k0",
    "luk-global-k1",
    "luk-global-k2",
    "luk-global-k3",
    "luk-local-and",
    "luk-local-fus",
    "modal-global-k0",
    "modal-global-k1",
    "modal-global-k2",
    "modal-global-k3",
    "modal-local",
    "pwk-local",
    "y-absorbs-neg",
    "y-is-one",
);

pub const TESTBEDS: &[(&str, &str)] = files!("testbeds":
    "fepfail",
    "k3-isp",
    "lattices",
    "modal-chains",
    "mv-chains",
    "wk3-isp",
);
