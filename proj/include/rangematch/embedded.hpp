#pragma once

#include <string_view>

// Bundled data files compiled into the library (see data/).
namespace rangematch::embedded {

std::string_view schema_json();
std::string_view catalog_json();
std::string_view default_dataset_csv();
std::string_view example_profile_json();

}  // namespace rangematch::embedded
