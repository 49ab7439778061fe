#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sphereforms {

/// Reference forms shipped with the library; the same documents live under
/// data/forms/. Embedded so the CLI and tests need no runtime data path.
struct BundledForm {
  std::string_view name;
  std::string_view text;  // coefficient-list JSON, ascending degree
};

inline const std::array<BundledForm, 12>& bundled_forms() {
  static const std::array<BundledForm, 12> forms = {{
    BundledForm{"a4_octic",
                R"json({
 "numer": [
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -1.0,
   0.0
  ]
 ],
 "denom": [
  [
   1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   14.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"cyclic5",
                R"json({
 "numer": [
  [
   0.0,
   1.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   2.0
  ]
 ],
 "denom": [
  [
   0.0,
   0.0
  ],
  [
   -1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"d2_quartic",
                R"json({
 "numer": [
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ],
 "denom": [
  [
   -1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"d2_sextic",
                R"json({
 "numer": [
  [
   -0.35355339059327373,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ],
 "denom": [
  [
   -1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -7.0710678118654755,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"dihedral5",
                R"json({
 "numer": [
  [
   -0.0,
   -1.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -0.0,
   -1.0
  ]
 ],
 "denom": [
  [
   0.0,
   0.0
  ],
  [
   -1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"icosahedral",
                R"json({
 "numer": [
  [
   0.0,
   -1.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   522.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   10005.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   10005.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -522.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -0.0
  ],
  [
   0.0,
   -1.0
  ]
 ],
 "denom": [
  [
   0.0,
   0.0
  ],
  [
   -1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -217.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   2015.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   5890.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -2015.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -217.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"octahedral",
                R"json({
 "numer": [
  [
   0.0,
   1.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -0.0,
   -33.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -0.0,
   -33.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   1.0
  ]
 ],
 "denom": [
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   13.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -13.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"tetrahedral",
                R"json({
 "numer": [
  [
   0.0,
   4.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   28.284271247461902
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   -4.0
  ]
 ],
 "denom": [
  [
   0.0,
   0.0
  ],
  [
   -4.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   9.899494936611665,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   4.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"trivial_quartic",
                R"json({
 "numer": [
  [
   -4.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ],
 "denom": [
  [
   -1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"two_pole",
                R"json({
 "numer": [
  [
   0.0,
   1.0
  ]
 ],
 "denom": [
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"z3_threefold",
                R"json({
 "numer": [
  [
   1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -27.037037037037038,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ],
 "denom": [
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -8.125,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
    BundledForm{"z4_no_mirror",
                R"json({
 "numer": [
  [
   0.09375,
   0.02734375
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   4.03125,
   1.48828125
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.5,
   -1.125
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   5.0
  ]
 ],
 "denom": [
  [
   0.0,
   0.0
  ],
  [
   0.02734375,
   -0.09375
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -0.40234375,
   1.59375
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   -0.625,
   -1.5
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   0.0,
   0.0
  ],
  [
   1.0,
   0.0
  ]
 ]
}
)json"},
  }};
  return forms;
}


inline std::string_view bundled_form_text(std::string_view name) {
  for (const auto& b : bundled_forms())
    if (b.name == name) return b.text;
  throw std::domain_error("unknown bundled form: " + std::string(name));
}

}  // namespace sphereforms
