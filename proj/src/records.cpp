#include "lcdbch/records.hpp"

#include <sys/file.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "lcdbch/error.hpp"

namespace lcdbch {

Json big_to_json(const BigUint& v) {
    if (v >= 0 && v <= std::numeric_limits<u64>::max()) return Json(v.convert_to<u64>());
    return Json(to_string(v));
}

BigUint big_from_json(const Json& j) {
    if (j.is_number_unsigned()) return BigUint(j.get<u64>());
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (v < 0) throw InvalidInput("negative integer in record");
        return BigUint(v);
    }
    if (j.is_string()) return parse_big(j.get<std::string>());
    throw InvalidInput("expected an integer or integer string in record");
}

namespace {

template <class T, class F>
Json opt(const std::optional<T>& v, F f) {
    return v ? f(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const ResultRecord& r) {
    Json j;
    j["q"] = r.q;
    j["m"] = r.m;
    j["lambda"] = r.lambda;
    j["n"] = big_to_json(r.n);
    j["b"] = r.b;
    j["delta"] = big_to_json(r.delta);
    j["k"] = opt(r.k, big_to_json);
    j["d_lower"] = opt(r.d_lower, big_to_json);
    j["d_exact"] = opt(r.d_exact, [](u64 v) { return Json(v); });
    j["lcd"] = opt(r.lcd, [](bool v) { return Json(v); });
    j["provenance"] = opt(r.provenance, [](Provenance p) { return Json(std::string(to_string(p))); });
    j["method"] = r.method;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

ResultRecord record_from_json(const Json& j) {
    ResultRecord r;
    r.q = j.at("q").get<u64>();
    r.m = j.at("m").get<unsigned>();
    r.lambda = j.at("lambda").get<u64>();
    r.n = big_from_json(j.at("n"));
    r.b = j.at("b").get<u64>();
    r.delta = big_from_json(j.at("delta"));
    if (!j.at("k").is_null()) r.k = big_from_json(j.at("k"));
    if (!j.at("d_lower").is_null()) r.d_lower = big_from_json(j.at("d_lower"));
    if (!j.at("d_exact").is_null()) r.d_exact = j.at("d_exact").get<u64>();
    if (!j.at("lcd").is_null()) r.lcd = j.at("lcd").get<bool>();
    if (!j.at("provenance").is_null()) r.provenance = parse_provenance(j.at("provenance").get<std::string>());
    r.method = j.at("method").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

Json to_json(const LeaderReport& r) {
    Json j;
    j["q"] = r.q;
    j["m"] = r.m;
    j["lambda"] = r.lambda;
    j["n"] = big_to_json(r.n);
    j["method"] = std::string(to_string(r.method));
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.leaders.size(); ++i)
        rows.push_back({{"rank", i + 1}, {"leader", r.leaders[i].leader}, {"coset_size", r.leaders[i].size}});
    j["leaders"] = std::move(rows);
    return j;
}

LeaderReport leader_report_from_json(const Json& j) {
    LeaderReport r;
    r.q = j.at("q").get<u64>();
    r.m = j.at("m").get<unsigned>();
    r.lambda = j.at("lambda").get<u64>();
    r.n = big_from_json(j.at("n"));
    r.method = parse_leader_method(j.at("method").get<std::string>());
    for (const auto& row : j.at("leaders"))
        r.leaders.push_back({row.at("leader").get<u64>(), row.at("coset_size").get<u64>()});
    return r;
}

namespace {

constexpr const char* kHeader = "q,m,lambda,rank,leader,coset_size,method";

// RAII advisory lock on an open stdio stream.
class FileLock {
public:
    FileLock(std::FILE* f, int op) : f_(f) {
        if (::flock(::fileno(f_), op) != 0) throw std::runtime_error("cannot lock leader cache");
    }
    ~FileLock() { ::flock(::fileno(f_), LOCK_UN); }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    std::FILE* f_;
};

struct Key {
    u64 q;
    unsigned m;
    u64 lambda;
    std::string method;
    auto operator<=>(const Key&) const = default;
};

using Table = std::map<Key, std::map<std::size_t, LeaderRecord>>;

Table parse_cache(std::FILE* f) {
    Table t;
    std::string content;
    char buf[4096];
    std::size_t got;
    std::rewind(f);
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) content.append(buf, got);
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == kHeader) continue;
        std::istringstream ls(line);
        std::string field[7];
        for (int i = 0; i < 7; ++i)
            if (!std::getline(ls, field[i], ',')) throw InvalidInput("malformed leader cache line: " + line);
        const Key key{std::stoull(field[0]), static_cast<unsigned>(std::stoul(field[1])), std::stoull(field[2]),
                      field[6]};
        t[key].emplace(std::stoull(field[3]), LeaderRecord{std::stoull(field[4]), std::stoull(field[5])});
    }
    return t;
}

}  // namespace

LeaderCache::LeaderCache(std::filesystem::path dir) {
    std::filesystem::create_directories(dir);
    file_ = dir / "leaders.csv";
}

std::optional<std::filesystem::path> LeaderCache::env_dir() {
    const char* v = std::getenv("LCDBCH_CACHE_DIR");
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::filesystem::path(v);
}

std::optional<std::vector<LeaderRecord>> LeaderCache::lookup(u64 q, unsigned m, u64 lambda, LeaderMethod method,
                                                             std::size_t count) const {
    std::FILE* f = std::fopen(file_.c_str(), "r");
    if (f == nullptr) return std::nullopt;
    Table t;
    {
        FileLock lock(f, LOCK_SH);
        t = parse_cache(f);
    }
    std::fclose(f);
    auto it = t.find(Key{q, m, lambda, std::string(to_string(method))});
    if (it == t.end()) return std::nullopt;
    std::vector<LeaderRecord> out;
    for (std::size_t r = 1; r <= count; ++r) {
        auto row = it->second.find(r);
        if (row == it->second.end()) return std::nullopt;
        out.push_back(row->second);
    }
    return out;
}

void LeaderCache::store(u64 q, unsigned m, u64 lambda, LeaderMethod method, const std::vector<LeaderRecord>& leaders) {
    std::FILE* f = std::fopen(file_.c_str(), "a+");
    if (f == nullptr) throw std::runtime_error("cannot open leader cache " + file_.string());
    {
        FileLock lock(f, LOCK_EX);
        const Table t = parse_cache(f);
        std::fseek(f, 0, SEEK_END);
        if (std::ftell(f) == 0) std::fprintf(f, "%s\n", kHeader);
        const Key key{q, m, lambda, std::string(to_string(method))};
        auto it = t.find(key);
        for (std::size_t r = 1; r <= leaders.size(); ++r) {
            if (it != t.end() && it->second.count(r)) continue;
            std::fprintf(f, "%llu,%u,%llu,%zu,%llu,%llu,%s\n", static_cast<unsigned long long>(q), m,
                         static_cast<unsigned long long>(lambda), r,
                         static_cast<unsigned long long>(leaders[r - 1].leader),
                         static_cast<unsigned long long>(leaders[r - 1].size), key.method.c_str());
        }
        std::fflush(f);
    }
    std::fclose(f);
}

}  // namespace lcdbch
