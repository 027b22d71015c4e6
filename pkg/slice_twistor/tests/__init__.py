# Test package





