#pragma once

#include "toricfano/cohomology.hpp"
#include "toricfano/equivalence.hpp"
#include "toricfano/invariants.hpp"
#include "toricfano/ring_iso.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace toricfano {

using Json = nlohmann::ordered_json;
inline constexpr int kReportSchema = 1;

Json matrix_json(const IntMatrix& M);  // row-major array of rows
Json vector_json(const LatticeVector& v);
Json polytope_json(const SmoothFanoPolytope& P);
Json presentation_json(const CohomologyPresentation& pres);
Json kve_json(const KveReport& r, const std::vector<std::string>& names);
Json mbn_json(const MbnBounds& m);
Json fingerprint_json(const InvariantFingerprint& fp, const std::vector<std::string>& names);
Json witness_json(const EquivalenceWitness& w);
Json iso_json(const RingIsoWitness& w);
// Classes and merges rendered with polytope ids.
Json partition_json(const Partition& part, const std::vector<SmoothFanoPolytope>& ps);

// ID when present, otherwise the label.
std::string display_id(const SmoothFanoPolytope& P);
// Integer ID when present, otherwise the label string.
Json id_json(const SmoothFanoPolytope& P);

// Paths (JSON pointers) where `expected` is not matched by `actual`. Objects match key-wise as a
// subset (key order ignored), arrays element-wise with equal length, scalars must be equal.
std::vector<std::string> golden_mismatches(const Json& expected, const Json& actual);

// Left-aligned plain text table.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    std::string render() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception is rethrown after all workers stop.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = n;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace toricfano
