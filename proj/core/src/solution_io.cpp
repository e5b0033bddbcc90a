#include "hexaframe/solution_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace hexaframe {
namespace {

using nlohmann::json;

const char* const kFaceNames[kNumFaces] = {"+x", "-x", "+y", "-y", "+z", "-z"};

json slot_to_json(const SlotId& slot) {
  return {{"kind", slot.kind == SlotKind::Corner ? "corner" : "edge"},
          {"index", slot.index},
          {"offset", slot.offset}};
}

SlotId slot_from_json(const json& j) {
  SlotId slot;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "corner")
    slot.kind = SlotKind::Corner;
  else if (kind == "edge")
    slot.kind = SlotKind::Edge;
  else
    throw std::invalid_argument("unknown slot kind '" + kind + "'");
  slot.index = j.at("index").get<int>();
  slot.offset = j.value("offset", 0);
  return slot;
}

Rotation rotation_from_json(const json& j) {
  const auto images = j.get<std::vector<int>>();
  if (images.size() != kNumFaces) throw std::invalid_argument("rotation needs 6 entries");
  Rotation::Perm perm{};
  std::array<bool, kNumFaces> hit{};
  for (int p = 0; p < kNumFaces; ++p) {
    const int img = images[p];
    if (img < 0 || img >= kNumFaces || hit[img])
      throw std::invalid_argument("rotation is not a permutation of 0..5");
    hit[img] = true;
    perm[p] = img;
  }
  return Rotation(perm);
}

}  // namespace

std::string solution_to_json(const FrameSolution& sol, int indent) {
  json placements = json::array();
  for (const auto& p : sol.placements) {
    const auto& perm = p.rotation.perm();
    placements.push_back({{"slot", slot_to_json(p.slot)},
                          {"variety", p.variety.name()},
                          {"rotation", std::vector<int>(perm.begin(), perm.end())}});
  }
  const json doc = {{"n", sol.n}, {"model", sol.model.name()}, {"placements", placements}};
  return doc.dump(indent);
}

FrameSolution solution_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    FrameSolution sol;
    sol.n = doc.at("n").get<int>();
    sol.model = Variety::parse(doc.at("model").get<std::string>());
    for (const auto& p : doc.at("placements")) {
      sol.placements.push_back({slot_from_json(p.at("slot")),
                                Variety::parse(p.at("variety").get<std::string>()),
                                rotation_from_json(p.at("rotation"))});
    }
    return sol;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed solution document: ") + e.what());
  }
}

std::string solution_to_text(const FrameSolution& sol) {
  std::string out = "n=" + std::to_string(sol.n) + " model " + sol.model.name() + "\n";
  for (const auto& p : sol.placements) {
    std::string line = p.slot.kind == SlotKind::Corner
                           ? "corner " + std::to_string(p.slot.index)
                           : "edge " + std::to_string(p.slot.index) + "/" + std::to_string(p.slot.offset);
    line.resize(10, ' ');
    line += p.variety.name() + " ";
    const auto exposed = exposed_faces(p.slot);
    const auto placed = p.rotation.apply(p.variety.canonical());
    for (int f = 0; f < kNumFaces; ++f) {
      const bool shown = std::find(exposed.begin(), exposed.end(), f) != exposed.end();
      line += std::string(" ") + kFaceNames[f] + ":" + std::to_string(placed[f]) + (shown ? "*" : " ");
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace hexaframe
