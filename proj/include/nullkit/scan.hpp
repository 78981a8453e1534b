#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace nullkit {

/// Number of i in [0, total) with pred(i). Work is split across `jobs`
/// threads in contiguous chunks; pred must be safe to call concurrently.
std::uint64_t parallel_count(std::uint64_t total, unsigned jobs, const std::function<bool(std::uint64_t)>& pred);

/// Smallest i in [0, total) with pred(i), independent of `jobs`.
std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, unsigned jobs,
                                                 const std::function<bool(std::uint64_t)>& pred);

}  // namespace nullkit
