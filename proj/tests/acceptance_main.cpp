#include "tileperm/tileperm.hpp"
int main() { return 0; }
