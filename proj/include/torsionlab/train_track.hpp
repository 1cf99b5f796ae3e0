#ifndef TORSIONLAB_TRAIN_TRACK_HPP
#define TORSIONLAB_TRAIN_TRACK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/json_io.hpp"

namespace torsionlab {

// Combinatorial train track: named edges and switches listing the two
// outgoing branches (left, right), optionally together with the large branch
// they merge into.  Weight functions satisfying the switch balance
// w(large) = w(left) + w(right) are the admissible transverse cocycles.
struct TrainTrackSwitch {
  std::optional<std::string> large;
  std::string left;
  std::string right;
};

struct TrainTrack {
  std::vector<std::string> edges;
  std::vector<TrainTrackSwitch> switches;

  bool has_edge(const std::string& e) const {
    for (const auto& known : edges)
      if (known == e) return true;
    return false;
  }
};

template <class K>
using EdgeWeights = std::map<std::string, K>;

inline TrainTrack train_track_from_json(const json& j) {
  if (!j.is_object() || !j.contains("edges") || !j.contains("switches"))
    throw ParseError("train track object needs edges and switches");
  TrainTrack track;
  for (const json& e : j.at("edges")) track.edges.push_back(e.get<std::string>());
  for (const json& s : j.at("switches")) {
    if (!s.is_array() || (s.size() != 2 && s.size() != 3))
      throw ParseError("switch entries are [left, right] or [large, left, right]");
    TrainTrackSwitch sw;
    std::size_t base = 0;
    if (s.size() == 3) {
      sw.large = s[0].get<std::string>();
      base = 1;
    }
    sw.left = s[base].get<std::string>();
    sw.right = s[base + 1].get<std::string>();
    for (const std::string& e : {sw.left, sw.right})
      if (!track.has_edge(e)) throw ParseError("switch references unknown edge '" + e + "'");
    if (sw.large && !track.has_edge(*sw.large))
      throw ParseError("switch references unknown edge '" + *sw.large + "'");
    track.switches.push_back(std::move(sw));
  }
  return track;
}

template <class K>
EdgeWeights<K> edge_weights_from_json(const json& j, const FieldContext& ctx,
                                      const TrainTrack& track) {
  if (!j.is_object() || !j.contains("weights")) throw ParseError("cocycle object needs weights");
  EdgeWeights<K> w;
  for (const auto& [edge, value] : j.at("weights").items()) {
    if (!track.has_edge(edge)) throw ParseError("weight for unknown edge '" + edge + "'");
    w[edge] = scalar_from_json<K>(value, ctx);
  }
  return w;
}

template <class K>
K weight_of(const EdgeWeights<K>& w, const std::string& edge) {
  auto it = w.find(edge);
  return it == w.end() ? FieldTraits<K>::from_int(0) : it->second;
}

// Switch balance: the large branch carries the sum of the two small ones.
// Pair-form switches record no large branch and impose no condition.
template <class K>
void check_switch_conditions(const TrainTrack& track, const EdgeWeights<K>& w) {
  for (std::size_t s = 0; s < track.switches.size(); ++s) {
    const TrainTrackSwitch& sw = track.switches[s];
    if (!sw.large) continue;
    K lhs = weight_of(w, *sw.large);
    K rhs = weight_of(w, sw.left) + weight_of(w, sw.right);
    if (!(lhs == rhs))
      throw SwitchConditionError("switch " + std::to_string(s) + " violates the balance condition");
  }
}

// Half the sum over switches of det [[s1(left), s1(right)], [s2(left),
// s2(right)]].
template <class K>
K thurston_form(const TrainTrack& track, const EdgeWeights<K>& s1, const EdgeWeights<K>& s2) {
  check_switch_conditions(track, s1);
  check_switch_conditions(track, s2);
  K acc = FieldTraits<K>::from_int(0);
  for (const TrainTrackSwitch& sw : track.switches) {
    K a = weight_of(s1, sw.left), b = weight_of(s1, sw.right);
    K c = weight_of(s2, sw.left), d = weight_of(s2, sw.right);
    acc += a * d - b * c;
  }
  return acc / FieldTraits<K>::from_int(2);
}

// The three proportional symplectic forms: values convert through fixed
// constants, with the Thurston normalization as the reference.
enum class SurfaceForm { Thurston, PSL2, WeilPetersson };

inline SurfaceForm surface_form_from_name(const std::string& s) {
  if (s == "thurston") return SurfaceForm::Thurston;
  if (s == "psl2") return SurfaceForm::PSL2;
  if (s == "wp" || s == "weil-petersson") return SurfaceForm::WeilPetersson;
  throw ParseError("unknown form '" + s + "' (expected thurston, psl2, wp)");
}

inline long surface_form_factor(SurfaceForm f) {
  switch (f) {
    case SurfaceForm::Thurston: return 1;
    case SurfaceForm::PSL2: return 2;
    case SurfaceForm::WeilPetersson: return -16;
  }
  return 1;
}

template <class K>
K form_conversion(const K& value, SurfaceForm from, SurfaceForm to) {
  K num = FieldTraits<K>::from_int(surface_form_factor(to));
  K den = FieldTraits<K>::from_int(surface_form_factor(from));
  return value * num / den;
}

}  // namespace torsionlab

#endif  // TORSIONLAB_TRAIN_TRACK_HPP
