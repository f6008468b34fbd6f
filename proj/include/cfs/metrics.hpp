#pragma once

#include <cstdint>

namespace cfs {

/// Work counters for the attack cost comparison.
struct OperationCount {
    std::uint64_t hash_evaluations = 0;
    std::uint64_t compressions = 0;
    std::uint64_t matvecs = 0;
    std::uint64_t decodes = 0;

    OperationCount& operator+=(const OperationCount& other);
    friend bool operator==(const OperationCount&, const OperationCount&) = default;
};

// Installs a thread-local counter for the lifetime of the scope. The counted
// primitives (hash entry points, compress, mat_vec, patterson_decode) bump
// whichever scope is innermost on the calling thread; without a scope the
// counting is a no-op. Scopes nest, and an inner scope also feeds its parent.
class CountingScope {
public:
    CountingScope();
    ~CountingScope();
    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

    const OperationCount& counts() const { return counts_; }

private:
    friend void count_hash_evaluation();
    friend void count_compression();
    friend void count_matvec();
    friend void count_decode();

    OperationCount counts_;
    CountingScope* parent_;
};

void count_hash_evaluation();
void count_compression();
void count_matvec();
void count_decode();

} // namespace cfs
