//! Station metadata and the built-in SURFRAD site table.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A ground measurement site.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StationMeta {
    pub name: String,
    /// Degrees north, in [-90, 90].
    pub latitude: f64,
    /// Degrees east, in [-180, 180].
    pub longitude: f64,
    /// Meters above sea level.
    pub elevation: f64,
}

impl StationMeta {
    pub fn new(name: impl Into<String>, latitude: f64, longitude: f64, elevation: f64) -> Result<Self> {
        let meta = StationMeta {
            name: name.into(),
            latitude,
            longitude,
            elevation,
        };
        meta.validate()?;
        Ok(meta)
    }

    pub fn validate(&self) -> Result<()> {
        if !(-90.0..=90.0).contains(&self.latitude) {
            return Err(Error::config("latitude", format!("{} outside [-90, 90]", self.latitude)));
        }
        if !(-180.0..=180.0).contains(&self.longitude) {
            return Err(Error::config(
                "longitude",
                format!("{} outside [-180, 180]", self.longitude),
            ));
        }
        if self.elevation < -100.0 {
            return Err(Error::config("elevation", format!("{} below -100 m", self.elevation)));
        }
        Ok(())
    }
}

/// One entry of the built-in SURFRAD network table.
#[derive(Debug, Clone)]
pub struct SurfradSite {
    /// Three-letter file prefix used by the NOAA archive (e.g. "psu").
    pub code: &'static str,
    /// Directory name in the NOAA archive (e.g. "Penn_State_PA").
    pub archive_dir: &'static str,
    pub name: &'static str,
    pub latitude: f64,
    pub longitude: f64,
    pub elevation: f64,
}

impl SurfradSite {
    pub fn meta(&self) -> StationMeta {
        StationMeta {
            name: self.name.to_string(),
            latitude: self.latitude,
            longitude: self.longitude,
            elevation: self.elevation,
        }
    }
}

/// The seven SURFRAD sites (NOAA GML published coordinates).
pub const SURFRAD_SITES: &[SurfradSite] = &[
    SurfradSite {
        code: "bon",
        archive_dir: "Bondville_IL",
        name: "Bondville",
        latitude: 40.05192,
        longitude: -88.37309,
        elevation: 230.0,
    },
    SurfradSite {
        code: "tbl",
        archive_dir: "Boulder_CO",
        name: "Boulder",
        latitude: 40.12498,
        longitude: -105.23680,
        elevation: 1689.0,
    },
    SurfradSite {
        code: "dra",
        archive_dir: "Desert_Rock_NV",
        name: "Desert Rock",
        latitude: 36.62373,
        longitude: -116.01947,
        elevation: 1007.0,
    },
    SurfradSite {
        code: "fpk",
        archive_dir: "Fort_Peck_MT",
        name: "Fort Peck",
        latitude: 48.30783,
        longitude: -105.10170,
        elevation: 634.0,
    },
    SurfradSite {
        code: "gwn",
        archive_dir: "Goodwin_Creek_MS",
        name: "Goodwin Creek",
        latitude: 34.2547,
        longitude: -89.8729,
        elevation: 98.0,
    },
    SurfradSite {
        code: "psu",
        archive_dir: "Penn_State_PA",
        name: "Penn State",
        latitude: 40.72012,
        longitude: -77.93085,
        elevation: 376.0,
    },
    SurfradSite {
        code: "sxf",
        archive_dir: "Sioux_Falls_SD",
        name: "Sioux Falls",
        latitude: 43.73403,
        longitude: -96.62328,
        elevation: 473.0,
    },
];

/// Look up a built-in site by code ("psu"), by name ("Penn State"), or by a
/// lowercased underscore alias ("penn_state").
pub fn find_site(key: &str) -> Option<&'static SurfradSite> {
    let norm = key.trim().to_lowercase().replace([' ', '-'], "_");
    SURFRAD_SITES.iter().find(|s| {
        s.code == norm
            || s.name.to_lowercase().replace([' ', '-'], "_") == norm
            || s.archive_dir.to_lowercase() == norm
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn site_lookup_by_code_name_and_alias() {
        assert_eq!(find_site("psu").unwrap().name, "Penn State");
        assert_eq!(find_site("Penn State").unwrap().code, "psu");
        assert_eq!(find_site("penn_state").unwrap().code, "psu");
        assert_eq!(find_site("Goodwin_Creek_MS").unwrap().code, "gwn");
        assert!(find_site("mars_base").is_none());
    }

    #[test]
    fn meta_ranges_validated() {
        assert!(StationMeta::new("x", 91.0, 0.0, 0.0).is_err());
        assert!(StationMeta::new("x", 0.0, -181.0, 0.0).is_err());
        assert!(StationMeta::new("x", 0.0, 0.0, -500.0).is_err());
        assert!(StationMeta::new("x", 40.0, -105.0, 1689.0).is_ok());
    }
}
