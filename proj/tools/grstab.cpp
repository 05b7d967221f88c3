// Batch front door; filled in alongside the io module.
int main() { return 0; }
