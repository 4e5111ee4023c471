#pragma once

#include <udapp/session.hpp>

#include <memory>
#include <string>
#include <vector>

namespace udapp {

const std::vector<std::string>& sample_names();
// Builds a named sample scene in its default state; UnknownSample otherwise.
std::unique_ptr<Scene> make_sample(const std::string& name);
// Builds the sample named in the archive and applies the archive to it.
std::unique_ptr<Scene> load_scene(const json& archive);

} // namespace udapp
