#include "lieder/campaign.hpp"

namespace lieder {

namespace {

std::string inclusion_detail(const Subspace& lhs, const Subspace& rhs) {
  return "dim " + std::to_string(lhs.dim()) + " in dim " + std::to_string(rhs.dim());
}

void solvability_checks(const SolvableInstance& inst, InstanceRecord& rec) {
  const auto report = check_solvability_theorem(inst.algebra, inst.ideal, inst.derivation);
  rec.observations.push_back(Observation{
      "s(I+D(I)) <= 2n", report.hypotheses_met, report.holds,
      "observed " + (report.observed ? std::to_string(*report.observed) : std::string("unsolvable")) +
          ", bound " + std::to_string(report.bound) + ", dim I+D(I) " +
          std::to_string(report.context.closure_dim)});
}

void degree_checks(const SolvableInstance& inst, std::size_t k_max, InstanceRecord& rec) {
  for (const auto& report : check_degree_theorem(inst.algebra, inst.ideal, inst.derivation, k_max)) {
    const std::string label = report.theorem == Theorem::Estimation
                                  ? "s(J_" + std::to_string(report.context.k) + ") <= k+1"
                                  : "s(J_" + std::to_string(report.context.k) + ") <= f_n(k)";
    rec.observations.push_back(Observation{
        label, true, report.holds,
        "observed " + (report.observed ? std::to_string(*report.observed) : std::string("unsolvable")) +
            ", bound " + std::to_string(report.bound) + ", dim J " +
            std::to_string(report.context.closure_dim)});
  }
}

void power_image_checks(const SolvableInstance& inst, InstanceRecord& rec) {
  const Subspace& ideal = inst.ideal.space();
  const auto series = derived_series(inst.algebra, ideal);
  for (std::size_t s = 0; s < series.size() && !series[s].is_zero(); ++s) {
    Subspace image = series[s];
    const std::size_t m_max = (std::size_t{1} << s) - 1;
    for (std::size_t m = 0; m <= m_max; ++m) {
      if (m > 0) image = apply_map(inst.derivation.matrix(), image);
      rec.observations.push_back(Observation{
          "D^" + std::to_string(m) + "(I^(" + std::to_string(s) + ")) <= I", true,
          subspace_leq(image, ideal), inclusion_detail(image, ideal)});
    }
  }
}

void key_checks(const SolvableInstance& inst, InstanceRecord& rec) {
  const FieldSpec f = inst.algebra.field();
  const Subspace& ideal = inst.ideal.space();
  const auto series = derived_series(inst.algebra, ideal);
  const Matrix& d = inst.derivation.matrix();
  for (std::size_t k = 1; k < series.size() && !series[k - 1].is_zero(); ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    const bool applicable = !f.is_prime_field() || !central_binomial_divisible(f.characteristic(), k);
    const Subspace left = power_image(d, series[k - 1], half);
    const Subspace lhs = bracket_spaces(inst.algebra, left, left);
    const Subspace rhs = subspace_sum(power_image(d, series[k], 2 * half), ideal);
    rec.observations.push_back(Observation{
        "[D^" + std::to_string(half) + "(I^(" + std::to_string(k - 1) + ")),same] <= D^" +
            std::to_string(2 * half) + "(I^(" + std::to_string(k) + "))+I",
        applicable, subspace_leq(lhs, rhs), inclusion_detail(lhs, rhs)});
  }
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Solvability: return "solvability";
    case Suite::Degree: return "degree";
    case Suite::PowerImage: return "power";
    case Suite::Key: return "key";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  if (name == "solvability") return Suite::Solvability;
  if (name == "degree") return Suite::Degree;
  if (name == "power") return Suite::PowerImage;
  if (name == "key") return Suite::Key;
  throw InvalidParameter("unknown suite '" + std::string(name) + "' (solvability|degree|power|key)");
}

std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t index) {
  std::uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

CampaignResult run_campaign(const CampaignOptions& options) {
  CampaignResult result{options, {}, 0, 0, 0};
  InstanceOptions inst_options = options.instance;
  if (options.field.is_prime_field()) {
    if (options.suite == Suite::Degree) {
      throw WrongCharacteristic("the degree suite is only defined in characteristic 0");
    }
    if (options.suite == Suite::Solvability && !inst_options.max_ideal_length) {
      const auto p = options.field.characteristic();
      if (p == 2) throw InvalidParameter("GF(2) admits no nonzero ideal with n < log2 p");
      inst_options.max_ideal_length = admissible_depth(p);
    }
  }
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::uint64_t seed = instance_seed(options.seed, i);
    const auto inst = random_solvable_instance(seed, inst_options, options.field);
    InstanceRecord rec{i,
                       seed,
                       inst.description,
                       inst.algebra.dim(),
                       inst.ideal.dim(),
                       *derived_length(inst.algebra, inst.ideal.space()),
                       {}};
    switch (options.suite) {
      case Suite::Solvability: solvability_checks(inst, rec); break;
      case Suite::Degree: degree_checks(inst, options.k_max, rec); break;
      case Suite::PowerImage: power_image_checks(inst, rec); break;
      case Suite::Key: key_checks(inst, rec); break;
    }
    for (const auto& obs : rec.observations) {
      ++result.checks;
      if (obs.applicable) {
        ++result.applicable;
        if (!obs.holds) ++result.violations;
      }
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace lieder
