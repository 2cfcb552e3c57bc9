//! OEIS b-file retrieval: bundled fixtures, an on-disk cache and the live
//! endpoint behind a [`Transport`].
//!
//! Cache layout is `<cache>/<id>.bfile`, same text format as the b-files and
//! fixtures. Writes go through a temporary file and a rename, so readers never
//! observe a partial file.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Duration;

use latrect_core::formulas::SequenceId;
use latrect_core::oeis::{
    check_terms, pairing, parse_bfile, validate_id, BFile, SeqCheckReport, TermSource,
};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "LATRECT_OEIS_CACHE";
/// Environment variable overriding the OEIS base URL.
pub const BASE_URL_ENV: &str = "LATRECT_OEIS_URL";
pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

#[derive(Debug, thiserror::Error)]
pub enum FetchError {
    #[error(transparent)]
    Sequence(#[from] latrect_core::Error),
    #[error("network fetch of {url} failed: {reason}")]
    Network { url: String, reason: String },
    #[error("{0} is not in the cache")]
    CacheMiss(String),
    #[error("no bundled fixture for {0}")]
    NoFixture(String),
    #[error("cache I/O: {0}")]
    Io(#[from] io::Error),
}

/// Blocking text download.
pub trait Transport {
    fn get(&self, url: &str) -> Result<String, String>;
}

/// HTTPS transport with a fixed overall timeout.
pub struct HttpTransport {
    agent: ureq::Agent,
}

impl HttpTransport {
    pub fn new(timeout: Duration) -> Self {
        let config = ureq::Agent::config_builder()
            .timeout_global(Some(timeout))
            .build();
        HttpTransport {
            agent: config.into(),
        }
    }
}

impl Default for HttpTransport {
    fn default() -> Self {
        HttpTransport::new(Duration::from_secs(20))
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<String, String> {
        let mut response = self.agent.get(url).call().map_err(|e| e.to_string())?;
        response
            .body_mut()
            .read_to_string()
            .map_err(|e| e.to_string())
    }
}

/// Where to look for terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourcePolicy {
    /// Download, refresh the cache, and fall back to the cache on failure.
    NetworkThenCache,
    CacheOnly,
    FixtureOnly,
}

const FIXTURES: [(&str, &str); 4] = [
    ("A004320", include_str!("../fixtures/oeis/A004320.bfile")),
    ("A002417", include_str!("../fixtures/oeis/A002417.bfile")),
    ("A330805", include_str!("../fixtures/oeis/A330805.bfile")),
    ("A213840", include_str!("../fixtures/oeis/A213840.bfile")),
];

/// Raw text of the bundled fixture for `id`.
pub fn fixture_text(id: &str) -> Option<&'static str> {
    FIXTURES
        .iter()
        .find(|(k, _)| *k == id)
        .map(|&(_, text)| text)
}

/// `https://oeis.org/A004320/b004320.txt` for `A004320`.
pub fn bfile_url(base: &str, id: &str) -> String {
    format!("{}/{id}/b{}.txt", base.trim_end_matches('/'), &id[1..])
}

/// `$LATRECT_OEIS_CACHE`, else `$XDG_CACHE_HOME/latrect/oeis`, else
/// `$HOME/.cache/latrect/oeis`.
pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(dir));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("latrect").join("oeis"))
}

pub struct Fetcher<T> {
    transport: T,
    base_url: String,
    cache_dir: Option<PathBuf>,
}

impl Fetcher<HttpTransport> {
    /// Live transport, base URL and cache directory from the environment.
    pub fn from_env() -> Self {
        let base = std::env::var(BASE_URL_ENV).unwrap_or_else(|_| DEFAULT_BASE_URL.to_string());
        Fetcher::new(HttpTransport::default(), base, default_cache_dir())
    }
}

impl<T: Transport> Fetcher<T> {
    pub fn new(transport: T, base_url: impl Into<String>, cache_dir: Option<PathBuf>) -> Self {
        Fetcher {
            transport,
            base_url: base_url.into(),
            cache_dir,
        }
    }

    fn cache_path(&self, id: &str) -> Option<PathBuf> {
        self.cache_dir
            .as_ref()
            .map(|d| d.join(format!("{id}.bfile")))
    }

    fn read_cache(&self, id: &str) -> Result<BFile, FetchError> {
        let path = self
            .cache_path(id)
            .ok_or_else(|| FetchError::CacheMiss(id.to_string()))?;
        match fs::read_to_string(&path) {
            Ok(text) => Ok(parse_bfile(id, &text)?),
            Err(e) if e.kind() == io::ErrorKind::NotFound => {
                Err(FetchError::CacheMiss(id.to_string()))
            }
            Err(e) => Err(e.into()),
        }
    }

    fn write_cache(&self, id: &str, text: &str) -> Result<(), FetchError> {
        let Some(path) = self.cache_path(id) else {
            return Ok(());
        };
        let dir = path.parent().unwrap_or(Path::new("."));
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{id}.bfile.{}.tmp", std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Retrieve the b-file for one of the identified sequences.
    pub fn fetch(&self, id: &str, policy: SourcePolicy) -> Result<(BFile, TermSource), FetchError> {
        validate_id(id)?;
        pairing(id)?;
        match policy {
            SourcePolicy::FixtureOnly => {
                let text = fixture_text(id).ok_or_else(|| FetchError::NoFixture(id.to_string()))?;
                Ok((parse_bfile(id, text)?, TermSource::Fixture))
            }
            SourcePolicy::CacheOnly => Ok((self.read_cache(id)?, TermSource::Cache)),
            SourcePolicy::NetworkThenCache => {
                let url = bfile_url(&self.base_url, id);
                match self.transport.get(&url) {
                    Ok(text) => {
                        let bfile = parse_bfile(id, &text)?;
                        self.write_cache(id, &text)?;
                        Ok((bfile, TermSource::Network))
                    }
                    Err(reason) => match self.read_cache(id) {
                        Ok(bfile) => Ok((bfile, TermSource::Cache)),
                        Err(FetchError::CacheMiss(_)) => Err(FetchError::Network { url, reason }),
                        Err(e) => Err(e),
                    },
                }
            }
        }
    }

    /// Fetch `oeis_id` and compare its terms `1..=n_max` with `sequence`.
    pub fn check(
        &self,
        oeis_id: &str,
        sequence: SequenceId,
        n_max: u64,
        policy: SourcePolicy,
    ) -> Result<SeqCheckReport, FetchError> {
        // reject a bad pairing before touching any source
        if pairing(oeis_id)? != sequence {
            return Err(latrect_core::Error::RejectedPairing {
                oeis: oeis_id.to_string(),
                sequence,
            }
            .into());
        }
        let (bfile, source) = self.fetch(oeis_id, policy)?;
        Ok(check_terms(&bfile, sequence, n_max, source)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::Cell;

    struct Canned(&'static str);

    impl Transport for Canned {
        fn get(&self, _url: &str) -> Result<String, String> {
            Ok(self.0.to_string())
        }
    }

    /// Fails the test if anything tries to use the network.
    struct Forbidden;

    impl Transport for Forbidden {
        fn get(&self, url: &str) -> Result<String, String> {
            panic!("unexpected network access to {url}");
        }
    }

    struct Offline(Cell<u32>);

    impl Transport for Offline {
        fn get(&self, _url: &str) -> Result<String, String> {
            self.0.set(self.0.get() + 1);
            Err("connection refused".into())
        }
    }

    #[test]
    fn url_scheme() {
        assert_eq!(
            bfile_url("https://oeis.org/", "A004320"),
            "https://oeis.org/A004320/b004320.txt"
        );
    }

    #[test]
    fn fixture_only_never_touches_the_transport() {
        let f = Fetcher::new(Forbidden, DEFAULT_BASE_URL, None);
        for (id, seq) in latrect_core::oeis::IDENTIFIED {
            let (bfile, source) = f.fetch(id, SourcePolicy::FixtureOnly).unwrap();
            assert_eq!(source, TermSource::Fixture);
            assert!(bfile.terms.len() >= 20);
            let report = f.check(id, seq, 20, SourcePolicy::FixtureOnly).unwrap();
            assert_eq!(report.matches, 20, "{id}");
        }
    }

    #[test]
    fn fixtures_round_trip_through_the_formatter() {
        for (id, _) in latrect_core::oeis::IDENTIFIED {
            let parsed = parse_bfile(id, fixture_text(id).unwrap()).unwrap();
            assert_eq!(parse_bfile(id, &parsed.to_string()).unwrap(), parsed);
        }
    }

    #[test]
    fn network_success_fills_the_cache() {
        let dir = tempfile::tempdir().unwrap();
        let f = Fetcher::new(
            Canned("1 1\n2 8\n3 30\n"),
            DEFAULT_BASE_URL,
            Some(dir.path().into()),
        );
        let (b, source) = f.fetch("A002417", SourcePolicy::NetworkThenCache).unwrap();
        assert_eq!(source, TermSource::Network);
        assert_eq!(b.terms.len(), 3);
        assert!(dir.path().join("A002417.bfile").exists());

        let cached = Fetcher::new(Forbidden, DEFAULT_BASE_URL, Some(dir.path().into()));
        let (b2, source) = cached.fetch("A002417", SourcePolicy::CacheOnly).unwrap();
        assert_eq!(source, TermSource::Cache);
        assert_eq!(b2, b);
    }

    #[test]
    fn network_failure_falls_back_to_cache() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("A004320.bfile"), "1 3\n").unwrap();
        let f = Fetcher::new(
            Offline(Cell::new(0)),
            DEFAULT_BASE_URL,
            Some(dir.path().into()),
        );
        let (_, source) = f.fetch("A004320", SourcePolicy::NetworkThenCache).unwrap();
        assert_eq!(source, TermSource::Cache);
        assert!(matches!(
            f.fetch("A330805", SourcePolicy::NetworkThenCache),
            Err(FetchError::Network { .. })
        ));
    }

    #[test]
    fn cache_only_miss_and_bad_ids() {
        let dir = tempfile::tempdir().unwrap();
        let f = Fetcher::new(Forbidden, DEFAULT_BASE_URL, Some(dir.path().into()));
        assert!(matches!(
            f.fetch("A002417", SourcePolicy::CacheOnly),
            Err(FetchError::CacheMiss(_))
        ));
        for policy in [
            SourcePolicy::CacheOnly,
            SourcePolicy::FixtureOnly,
            SourcePolicy::NetworkThenCache,
        ] {
            assert!(matches!(
                f.fetch("A000000", policy),
                Err(FetchError::Sequence(latrect_core::Error::UnknownSequence(
                    _
                )))
            ));
        }
        assert!(matches!(
            f.check("A213840", SequenceId::AHalf, 5, SourcePolicy::FixtureOnly),
            Err(FetchError::Sequence(
                latrect_core::Error::RejectedPairing { .. }
            ))
        ));
    }

    #[test]
    fn offset_one_check() {
        let f = Fetcher::new(Forbidden, DEFAULT_BASE_URL, None);
        let r = f
            .check("A330805", SequenceId::A, 1, SourcePolicy::FixtureOnly)
            .unwrap();
        assert_eq!(r.matches, 1);
        let (b, _) = f.fetch("A330805", SourcePolicy::FixtureOnly).unwrap();
        assert_eq!(b.term(1), Some(9));
    }
}
