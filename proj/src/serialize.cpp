#include "josephus/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace josephus {

void to_json(nlohmann::json& j, const Circle& c) {
  j = nlohmann::json{{"focus", c.focus()},
                     {"rest", std::vector<Label>(c.rest().begin(), c.rest().end())}};
}

void to_json(nlohmann::json& j, const ImperativeState& s) {
  j = nlohmann::json{{"index", s.index}, {"prisoners", s.prisoners}};
}

void to_json(nlohmann::json& j, const KillSequence& ks) {
  j = nlohmann::json{{"n", ks.problem.n()},
                     {"m", ks.problem.m()},
                     {"order", ks.order},
                     {"survivor", ks.survivor}};
}

void from_json(const nlohmann::json& j, KillSequence& ks) {
  try {
    Problem p(j.at("n").get<std::int64_t>(), j.at("m").get<std::int64_t>());
    auto order = j.at("order").get<std::vector<Label>>();
    auto survivor = j.at("survivor").get<Label>();
    if (survivor < 1 || survivor > p.n()) throw InvalidInput("survivor is outside 1..n");
    // An empty order with n > 1 is a survivor-only result.
    const bool has_order = !order.empty() || p.n() == 1;
    if (has_order) {
      std::vector<Label> all = order;
      all.push_back(survivor);
      std::sort(all.begin(), all.end());
      for (std::size_t i = 0; i < all.size(); ++i)
        if (all.size() != static_cast<std::size_t>(p.n()) || all[i] != static_cast<Label>(i + 1))
          throw InvalidInput("order and survivor are not a permutation of 1..n");
    }
    ks = KillSequence{p, std::move(order), survivor, has_order};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed kill sequence: ") + e.what());
  }
}

std::string kill_sequence_json(const KillSequence& ks) { return nlohmann::json(ks).dump(); }

KillSequence parse_kill_sequence_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed kill sequence: ") + e.what());
  }
  KillSequence ks{Problem(1, 1), {}, 1, true};
  from_json(j, ks);
  return ks;
}

std::string kill_sequence_csv(const KillSequence& ks, const std::vector<std::string>& states) {
  if (!states.empty() && states.size() != ks.order.size())
    throw InvalidInput("one state per kill is required");
  std::ostringstream os;
  os << "step,killed,remaining_count";
  if (!states.empty()) os << ",state";
  os << '\n';
  for (std::size_t i = 0; i < ks.order.size(); ++i) {
    os << (i + 1) << ',' << ks.order[i] << ',' << (ks.problem.n() - static_cast<Label>(i + 1));
    if (!states.empty()) {
      os << ",\"";
      for (char ch : states[i]) os << (ch == '"' ? "\"\"" : std::string(1, ch));
      os << '"';
    }
    os << '\n';
  }
  return os.str();
}

namespace {

nlohmann::json counterexample_json(const Verdict& v, const char* check) {
  if (!v.counterexample && v.holds) return nullptr;
  nlohmann::json j{{"check", check}, {"failure", failure_name(v.failure)}, {"detail", v.detail}};
  if (v.counterexample) {
    j["state"] = v.counterexample->state;
    j["map_after_step"] = v.counterexample->map_after_step;
    j["step_after_map"] = v.counterexample->step_after_map;
  }
  return j;
}

}  // namespace

nlohmann::json verdict_json(const EquivalenceReport& r) {
  nlohmann::json ce = counterexample_json(r.morphism, "morphism");
  if (ce.is_null()) ce = counterexample_json(r.isomorphism, "isomorphism");
  return nlohmann::json{{"morphism", r.morphism.holds},
                        {"isomorphism", r.isomorphism.holds},
                        {"counterexample", ce},
                        {"states_checked", r.morphism.states_checked}};
}

std::vector<Circle> zipper_trace(const Problem& p) {
  std::vector<Circle> out;
  Circle c = initial_circle(p.n());
  while (!is_singleton(c)) {
    c = remove_nth(p.m(), std::move(c)).second;
    out.push_back(c);
  }
  return out;
}

std::vector<ImperativeState> imperative_trace(const Problem& p) {
  std::vector<ImperativeState> out;
  ImperativeState s = initial_imperative(p.n());
  while (s.prisoners.size() > 1) {
    imperative_kill(s, p.m());
    out.push_back(s);
  }
  return out;
}

}  // namespace josephus
