#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bethesym/lattice.hpp"

namespace bethesym {

enum class Profile { Smoke, Standard, Deep };

const char* profile_name(Profile p);
Profile profile_from_name(const std::string& name);

struct TaskInfo {
    const char* id;
    const char* description;
    bool symbolic_capable;
};

/// Canonical task table; order is the execution order of run_suite.
const std::vector<TaskInfo>& task_table();
bool is_known_task(const std::string& id);

struct VerificationTask {
    std::string id;
    Profile profile = Profile::Standard;
    std::uint64_t seed = 1;
    int samples = 0;       // 0 = profile default
    bool symbolic = false; // symbolic-mode request; honored where supported
    Caps caps;
};

struct Failure {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string task;
    std::string profile;
    std::uint64_t seed = 0;
    int instances = 0;
    int passes = 0;
    std::vector<Failure> failures;
    std::int64_t millis = 0;

    std::string to_json() const;
    static VerificationReport from_json(const std::string& text);
};

/// Deterministic sampler over numerators [-9, 9] \ {0} and denominators
/// {1, 2, 3, 5, 7}; resamples until every forbidden expression is nonzero.
class PointSampler {
  public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next_rational();

    /// Assignment for the named variables with all guards nonzero at the point.
    /// Throws SamplingExhausted after 100 attempts.
    std::map<int32_t, Rational> sample(const std::vector<std::string>& variables,
                                       const std::vector<Rf>& forbidden);

  private:
    std::mt19937_64 rng_;
};

VerificationReport run_task(const VerificationTask& task);

/// Runs all tasks whose id matches the filter (with * and ? wildcards) in
/// canonical order; unknown patterns yield an empty list.
std::vector<VerificationReport> run_suite(const std::string& filter, Profile profile,
                                          std::uint64_t seed, bool symbolic = false,
                                          const Caps& caps = default_caps());

bool wildcard_match(const std::string& pattern, const std::string& text);

}  // namespace bethesym
