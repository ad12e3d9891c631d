#pragma once

#include <fstream>
#include <sstream>
#include <string>

#ifndef CVDFUSION_FIXTURE_DIR
#error "CVDFUSION_FIXTURE_DIR must be defined"
#endif

inline std::string fixture_path(const std::string& name) {
  return std::string(CVDFUSION_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
