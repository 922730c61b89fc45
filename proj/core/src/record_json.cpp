#include <json.hpp>

#include "tipdetect/pipeline.hpp"

namespace tipdetect {

std::string record_to_json(const DetectionRecord& rec, bool include_timings) {
  using json = nlohmann::ordered_json;

  json j;
  j["frame"] = rec.frame_id;
  j["width"] = rec.width;
  j["height"] = rec.height;
  j["status"] = rec.status == DetectionRecord::Status::Ok ? "ok" : "no_hand";
  if (rec.orientation) {
    j["wrist_side"] = side_name(rec.orientation->wrist_side);
    j["finger_side"] = side_name(rec.orientation->finger_side);
  } else {
    j["wrist_side"] = nullptr;
    j["finger_side"] = nullptr;
  }
  if (rec.crop) {
    j["crop"] = {{"x_min", rec.crop->x_min},
                 {"x_max", rec.crop->x_max},
                 {"y_min", rec.crop->y_min},
                 {"y_max", rec.crop->y_max}};
  } else {
    j["crop"] = nullptr;
  }
  j["fingertips"] = json::array();
  for (const Fingertip& tip : rec.fingertips)
    j["fingertips"].push_back({{"x", tip.x}, {"y", tip.y}});
  if (include_timings) {
    json t = json::object();
    for (const auto& [name, us] : rec.timings_us) t[name] = us;
    j["timings_us"] = std::move(t);
  }
  return j.dump();
}

}  // namespace tipdetect
