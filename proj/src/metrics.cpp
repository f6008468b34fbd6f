#include "cfs/metrics.hpp"

namespace cfs {

namespace {
thread_local CountingScope* active_scope = nullptr;
}

OperationCount& OperationCount::operator+=(const OperationCount& other)
{
    hash_evaluations += other.hash_evaluations;
    compressions += other.compressions;
    matvecs += other.matvecs;
    decodes += other.decodes;
    return *this;
}

CountingScope::CountingScope() : parent_(active_scope) { active_scope = this; }

CountingScope::~CountingScope()
{
    active_scope = parent_;
    if (parent_)
        parent_->counts_ += counts_;
}

void count_hash_evaluation()
{
    if (active_scope)
        ++active_scope->counts_.hash_evaluations;
}

void count_compression()
{
    if (active_scope)
        ++active_scope->counts_.compressions;
}

void count_matvec()
{
    if (active_scope)
        ++active_scope->counts_.matvecs;
}

void count_decode()
{
    if (active_scope)
        ++active_scope->counts_.decodes;
}

} // namespace cfs
