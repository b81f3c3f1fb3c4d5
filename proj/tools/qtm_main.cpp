// Copyright 2026 The qtm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include "qtm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  qtm::cli::ExperimentConfig config;
  try {
    config = qtm::cli::parse_config(args);
  } catch (const qtm::cli::HelpRequested& help) {
    std::cout << help.what();
    return qtm::cli::kSuccess;
  } catch (const qtm::cli::UsageError& e) {
    std::cerr << "qtm: " << e.what() << "\n";
    return qtm::cli::kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qtm: " << e.what() << "\n";
    return qtm::cli::kUsageError;
  }
  return qtm::cli::run(config, std::cout, std::cerr);
}
