#pragma once

#include <compograph/model.hpp>
#include <compograph/service.hpp>
#include <compograph/type_set.hpp>

#include <random>
#include <string>
#include <vector>

namespace compograph::testing {

// WEATHER-WS, typed in from the case-study table.
inline Catalog weather_catalog() {
  return Catalog("weather-ws",
                 {
                     Service("s1", {"city"}, {"longitude", "latitude"}),
                     Service("s2", {"longitude", "latitude"}, {"weather"}),
                     Service("s3", {"zipcode"}, {"longitude", "latitude"}),
                     Service("s4", {"zipcode"}, {"weather"}),
                     Service("s5", {"longitude", "latitude", "road"}, {"zipcode"}),
                     Service("s6", {"city"}, {"zipcode"}),
                 });
}

// The six nodes of the printed WEATHER-WS composition model.
struct WeatherNodes {
  Node s1{"s1", {"city"}, {"latitude", "longitude"}};
  Node s2a{"s2", {"city", "latitude", "longitude"}, {"latitude", "longitude", "weather"}};
  Node s5a{"s5", {"city", "latitude", "longitude", "road"}, {"latitude", "longitude", "zipcode"}};
  Node s5b{"s5", {"city", "latitude", "longitude", "road"},
           {"latitude", "longitude", "weather", "zipcode"}};
  Node s2b{"s2", {"city", "latitude", "longitude", "road"},
           {"latitude", "longitude", "weather", "zipcode"}};
  Node s4{"s4", {"city", "latitude", "longitude", "road", "zipcode"},
          {"latitude", "longitude", "weather", "zipcode"}};
};

inline std::string weather_dsl() {
  return "collection weather-ws\n"
         "s1 : city -> longitude latitude\n"
         "s2 : longitude latitude -> weather\n"
         "s3 : zipcode -> longitude latitude\n"
         "s4 : zipcode -> weather\n"
         "s5 : longitude latitude road -> zipcode\n"
         "s6 : city -> zipcode\n";
}

// Random subset of t1..tN, each member kept with probability 1/2.
inline TypeSet random_subset(std::mt19937_64& rng, std::size_t universe) {
  std::vector<std::string> members;
  for (std::size_t t = 1; t <= universe; ++t) {
    if (rng() & 1) members.push_back("t" + std::to_string(t));
  }
  return TypeSet(std::span<const std::string>(members));
}

}  // namespace compograph::testing
