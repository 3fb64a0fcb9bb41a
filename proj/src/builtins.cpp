#include "extrilen/builtins.hpp"

#include <map>

namespace extrilen {

namespace {

constexpr std::string_view kA2Mod = R"(# mod kA2 for the quiver 1 -> 2, theta = composition length.
[objects]
p1 2 brick=1
s1 1 brick=1
s2 1 brick=1
[morphisms]
p1_p1 p1 -> p1 image=p1 inflation=1 deflation=1
p1_s1 p1 -> s1 image=s1 inflation=0 deflation=1
s1_s1 s1 -> s1 image=s1 inflation=1 deflation=1
s2_p1 s2 -> p1 image=s2 inflation=1 deflation=0
s2_s2 s2 -> s2 image=s2 inflation=1 deflation=1
[conflations]
s2 >-> p1 ->> s1
[meta]
name=a2_mod
theta_bound=4
)";

constexpr std::string_view kA3Mod = R"(# mod kA3 for the quiver 1 -> 2 -> 3, theta = composition length.
[objects]
i2 2 brick=1
p1 3 brick=1
p2 2 brick=1
s1 1 brick=1
s2 1 brick=1
s3 1 brick=1
[morphisms]
i2_i2 i2 -> i2 image=i2 inflation=1 deflation=1
i2_s1 i2 -> s1 image=s1 inflation=0 deflation=1
p1_i2 p1 -> i2 image=i2 inflation=0 deflation=1
p1_p1 p1 -> p1 image=p1 inflation=1 deflation=1
p1_s1 p1 -> s1 image=s1 inflation=0 deflation=1
p2_i2 p2 -> i2 image=s2 inflation=0 deflation=0
p2_p1 p2 -> p1 image=p2 inflation=1 deflation=0
p2_p2 p2 -> p2 image=p2 inflation=1 deflation=1
p2_s2 p2 -> s2 image=s2 inflation=0 deflation=1
s1_s1 s1 -> s1 image=s1 inflation=1 deflation=1
s2_i2 s2 -> i2 image=s2 inflation=1 deflation=0
s2_s2 s2 -> s2 image=s2 inflation=1 deflation=1
s3_p1 s3 -> p1 image=s3 inflation=1 deflation=0
s3_p2 s3 -> p2 image=s3 inflation=1 deflation=0
s3_s3 s3 -> s3 image=s3 inflation=1 deflation=1
[conflations]
p2 >-> p1 ->> s1
p2 >-> s2+p1 ->> i2
s2 >-> i2 ->> s1
s3 >-> p1 ->> i2
s3 >-> p2 ->> s2
[meta]
name=a3_mod
theta_bound=6
)";

constexpr std::string_view kA3Theta = R"(# Filt{S2[-1], S1[-1], P1} inside the bounded derived category of kA3
# (quiver 1 -> 2 -> 3), theta = length of a minimal filtration by those three.
# Homs, images and conflations are read off the Auslander-Reiten quiver;
# the middle terms come from the triangles
#   S2[-1] -> I2[-1] -> S1[-1]    S1[-1] -> P2 -> P1    I2[-1] -> S3 -> P1
#   S2[-1] -> S3 -> P2            I2[-1] -> S1[-1]+S3 -> P2 (Auslander-Reiten)
[objects]
I2[-1] 2 brick=1
P1 1 brick=1
P2 2 brick=1
S1[-1] 1 brick=1
S2[-1] 1 brick=1
S3 3 brick=1
[morphisms]
I2[-1]_I2[-1] I2[-1] -> I2[-1] image=I2[-1] inflation=1 deflation=1
I2[-1]_P2 I2[-1] -> P2 image=S1[-1] inflation=0 deflation=0
I2[-1]_S1[-1] I2[-1] -> S1[-1] image=S1[-1] inflation=0 deflation=1
I2[-1]_S3 I2[-1] -> S3 image=I2[-1] inflation=1 deflation=0
P1_P1 P1 -> P1 image=P1 inflation=1 deflation=1
P2_P1 P2 -> P1 image=P1 inflation=0 deflation=1
P2_P2 P2 -> P2 image=P2 inflation=1 deflation=1
S1[-1]_P2 S1[-1] -> P2 image=S1[-1] inflation=1 deflation=0
S1[-1]_S1[-1] S1[-1] -> S1[-1] image=S1[-1] inflation=1 deflation=1
S2[-1]_I2[-1] S2[-1] -> I2[-1] image=S2[-1] inflation=1 deflation=0
S2[-1]_S2[-1] S2[-1] -> S2[-1] image=S2[-1] inflation=1 deflation=1
S2[-1]_S3 S2[-1] -> S3 image=S2[-1] inflation=1 deflation=0
S3_P1 S3 -> P1 image=P1 inflation=0 deflation=1
S3_P2 S3 -> P2 image=P2 inflation=0 deflation=1
S3_S3 S3 -> S3 image=S3 inflation=1 deflation=1
[conflations]
I2[-1] >-> S1[-1]+S3 ->> P2
I2[-1] >-> S3 ->> P1
S1[-1] >-> P2 ->> P1
S2[-1] >-> I2[-1] ->> S1[-1]
S2[-1] >-> S3 ->> P2
[meta]
name=a3_theta
theta_bound=6
)";

constexpr std::string_view kEmpty = R"([objects]
[morphisms]
[conflations]
[meta]
name=empty
)";

const std::map<std::string, std::string_view, std::less<>>& table() {
  static const std::map<std::string, std::string_view, std::less<>> builtins{
      {"a2_mod", kA2Mod}, {"a3_mod", kA3Mod}, {"a3_theta", kA3Theta}, {"empty", kEmpty}};
  return builtins;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : table()) out.push_back(name);
  return out;
}

std::string_view builtin_text(std::string_view name) {
  const auto it = table().find(name);
  if (it == table().end()) throw std::invalid_argument("unknown builtin instance: " + std::string(name));
  return it->second;
}

Instance builtin_instance(std::string_view name) { return load_instance(builtin_text(name)); }

}  // namespace extrilen
