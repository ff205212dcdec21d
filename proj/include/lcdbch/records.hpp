#pragma once

// JSON result records and the append-only leader cache.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcdbch/cosets.hpp"
#include "lcdbch/leaders.hpp"
#include "lcdbch/modmath.hpp"

namespace lcdbch {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones strings.
Json big_to_json(const BigUint& v);
BigUint big_from_json(const Json& j);

/// One dimension/code result. Absent optionals render as null.
struct ResultRecord {
    u64 q = 0;
    unsigned m = 0;
    u64 lambda = 1;
    BigUint n;
    u64 b = 0;
    BigUint delta;  // literal designed distance of C_(q,n,delta,b)
    std::optional<BigUint> k;
    std::optional<BigUint> d_lower;
    std::optional<u64> d_exact;
    std::optional<bool> lcd;
    std::optional<Provenance> provenance;
    std::string method;
    double elapsed_ms = 0;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

Json to_json(const ResultRecord& r);
ResultRecord record_from_json(const Json& j);

/// A ranked leader table for modulus (q^m+1)/lambda.
struct LeaderReport {
    u64 q = 0;
    unsigned m = 0;
    u64 lambda = 1;
    BigUint n;
    LeaderMethod method = LeaderMethod::brute;
    std::vector<LeaderRecord> leaders;  // rank 1 first

    friend bool operator==(const LeaderReport&, const LeaderReport&) = default;
};

Json to_json(const LeaderReport& r);
LeaderReport leader_report_from_json(const Json& j);

/// CSV file `leaders.csv` with columns q,m,lambda,rank,leader,coset_size,method.
/// Appends hold an exclusive advisory lock; reads a shared one.
class LeaderCache {
public:
    explicit LeaderCache(std::filesystem::path dir);

    /// Directory from $LCDBCH_CACHE_DIR, if set and non-empty.
    static std::optional<std::filesystem::path> env_dir();

    const std::filesystem::path& file() const { return file_; }

    /// Ranks 1..count if all are cached for the key.
    std::optional<std::vector<LeaderRecord>> lookup(u64 q, unsigned m, u64 lambda, LeaderMethod method,
                                                    std::size_t count) const;
    /// Appends the ranks not already present.
    void store(u64 q, unsigned m, u64 lambda, LeaderMethod method, const std::vector<LeaderRecord>& leaders);

private:
    std::filesystem::path file_;
};

}  // namespace lcdbch
