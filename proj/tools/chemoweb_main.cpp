#include <cstdio>
int main(){ std::puts("chemoweb"); return 0; }
