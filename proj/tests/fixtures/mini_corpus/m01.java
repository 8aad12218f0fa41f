public class A { void m(){} }
