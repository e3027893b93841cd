#include "adams/oeis.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <json.hpp>

#include "adams/errors.hpp"

#ifdef ADAMS_WITH_NETWORK
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

namespace adams::oeis {

namespace fs = std::filesystem;

std::string normalize_id(const std::string& id) {
    std::string s = id;
    if (!s.empty() && (s[0] == 'a')) s[0] = 'A';
    bool ok = s.size() == 7 && s[0] == 'A';
    for (std::size_t i = 1; ok && i < s.size(); ++i) ok = s[i] >= '0' && s[i] <= '9';
    if (!ok) throw Error(Errc::InvalidArgument, "not an OEIS id: '" + id + "'");
    return s;
}

fs::path default_cache_dir() {
    if (const char* env = std::getenv("ADAMS_SPECTRA_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "adams-spectra";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "adams-spectra";
    return fs::temp_directory_path() / "adams-spectra";
}

std::vector<std::pair<long, BigInt>> parse_bfile(const std::string& text) {
    std::vector<std::pair<long, BigInt>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line.substr(start));
        long n = 0;
        std::string value;
        if (!(fields >> n >> value)) throw Error(Errc::ParseError, "b-file line " + std::to_string(lineno) + ": '" + line + "'");
        try {
            out.emplace_back(n, BigInt(value));
        } catch (const std::exception&) {
            throw Error(Errc::ParseError, "b-file line " + std::to_string(lineno) + ": bad integer '" + value + "'");
        }
        if (out.size() > 1 && out.back().first != out[out.size() - 2].first + 1)
            throw Error(Errc::ParseError, "b-file line " + std::to_string(lineno) + ": indices not consecutive");
    }
    return out;
}

bool network_available() noexcept {
#ifdef ADAMS_WITH_NETWORK
    return true;
#else
    return false;
#endif
}

Client::Client(fs::path cache_dir, bool allow_network) : dir_(std::move(cache_dir)), allow_network_(allow_network) {}

fs::path Client::bfile_path(const std::string& id) const { return dir_ / (normalize_id(id) + ".b.txt"); }
fs::path Client::meta_path(const std::string& id) const { return dir_ / (normalize_id(id) + ".meta.json"); }

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class FileLock {
public:
    explicit FileLock(const fs::path& p) : fd_(::open(p.c_str(), O_CREAT | O_RDWR, 0644)) {
        if (fd_ < 0) throw Error(Errc::InvalidArgument, "cannot open lock file " + p.string());
        ::flock(fd_, LOCK_EX);
    }
    ~FileLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_;
};

void write_atomically(const fs::path& target, const std::string& content) {
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) throw Error(Errc::InvalidArgument, "cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace

void Client::store(const std::string& id, const std::string& bfile, const std::string& fetched_at) const {
    const std::string key = normalize_id(id);
    (void)parse_bfile(bfile);
    fs::create_directories(dir_);
    FileLock lock(dir_ / ".lock");
    write_atomically(bfile_path(key), bfile);
    nlohmann::json meta{{"id", key}, {"fetched_at", fetched_at}, {"source", "https://oeis.org/" + key + "/b" + key.substr(1) + ".txt"}};
    write_atomically(meta_path(key), meta.dump(2) + "\n");
}

std::string Client::fetch(const std::string& id) const {
#ifdef ADAMS_WITH_NETWORK
    httplib::SSLClient cli("oeis.org");
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    cli.set_follow_location(true);
    const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto res = cli.Get(path);
    if (!res) throw Error(Errc::NetworkError, "GET https://oeis.org" + path + ": " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw Error(Errc::NetworkError, "GET https://oeis.org" + path + ": HTTP " + std::to_string(res->status));
    return res->body;
#else
    throw Error(Errc::NetworkError, "built without network support; cannot fetch " + id);
#endif
}

OeisRecord Client::lookup(const std::string& raw_id) const {
    const std::string id = normalize_id(raw_id);
    OeisRecord rec;
    rec.id = id;
    std::string text;
    if (fs::exists(bfile_path(id))) {
        text = read_file(bfile_path(id));
        if (fs::exists(meta_path(id))) {
            try {
                auto meta = nlohmann::json::parse(read_file(meta_path(id)));
                rec.fetched_at = meta.value("fetched_at", "");
            } catch (const nlohmann::json::exception& e) {
                throw Error(Errc::ParseError, "cache metadata for " + id + ": " + e.what());
            }
        }
    } else if (!allow_network_) {
        throw Error(Errc::CacheMiss, id + " is not cached in " + dir_.string() + " and network access is disabled");
    } else {
        text = fetch(id);
        rec.fetched_at = utc_now();
        rec.offline = false;
        store(id, text, rec.fetched_at);
    }
    auto rows = parse_bfile(text);
    if (rows.empty()) throw Error(Errc::ParseError, "no terms for " + id);
    rec.offset = rows.front().first;
    for (auto& [n, a] : rows) rec.terms.push_back(std::move(a));
    return rec;
}

MatchReport check(const OeisRecord& record, const std::vector<BigInt>& computed, std::optional<long> first_index) {
    MatchReport r;
    r.id = record.id;
    r.first_index = first_index.value_or(record.offset);
    const long skip = r.first_index - record.offset;
    if (skip < 0) throw Error(Errc::InvalidArgument, "index " + std::to_string(r.first_index) + " precedes the offset of " + record.id);
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const auto at = static_cast<std::size_t>(skip) + i;
        if (at >= record.terms.size()) break;
        ++r.compared;
        if (record.terms[at] != computed[i]) {
            r.mismatch_index = r.first_index + static_cast<long>(i);
            r.expected = record.terms[at];
            r.actual = computed[i];
            return r;
        }
    }
    r.match = r.compared > 0;
    return r;
}

} // namespace adams::oeis
