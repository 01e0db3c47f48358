# Code and enumerator services
